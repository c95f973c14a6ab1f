#pragma once

#include "orichrom/limits.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orichrom {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int samples = 1000;            ///< random orientations per construction (strong-lexico-w)
    int property_instances = 500;  ///< random factor pairs (properties)
    int k = 3;                     ///< strong-paths: length of the first directed path
    int l = 3;                     ///< strong-paths: length of the second directed path
    Limits limits;
};

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool correct = false;     ///< every mathematical assertion held
    double elapsed_s = 0;
    double budget_s = 0;
    std::string summary;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    bool within_budget() const { return elapsed_s <= budget_s; }
    bool passed() const { return correct && within_budget(); }
};

/// Check names in criterion order (criterion i is names[i-1]).
const std::vector<std::string> &check_names();

/// Runs one named check. Throws InvalidArgument for unknown names.
CheckResult run_check(std::string_view name, const VerifyOptions &options = {});

/// Deterministic 64-bit mixer used to derive per-sample seeds.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace orichrom
