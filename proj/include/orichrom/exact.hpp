#pragma once

#include "orichrom/graph.hpp"
#include "orichrom/homomorphism.hpp"
#include "orichrom/limits.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace orichrom {

/// Exact chi(G). Throws CapExceeded above limits.max_vertices.
int chromatic_number(const UndirectedGraph &g, const Limits &limits = {});
/// A proper colouring with chi(G) colours (ids 0..chi-1).
VertexMap optimal_proper_coloring(const UndirectedGraph &g, const Limits &limits = {});

/// Exact oriented chromatic number of an oriented graph.
int chi_o_oriented(const OrientedGraph &d, const Limits &limits = {});
VertexMap optimal_oriented_coloring(const OrientedGraph &d, const Limits &limits = {});

struct SweepResult {
    int value = 0;
    std::uint64_t witness = 0;  ///< smallest orientation index attaining `value`
    std::uint64_t orientations = 0;
};

/// Maximum of chi_o over all orientations (lexicographic EdgeOrder indices).
SweepResult chi_o_undirected_sweep(const UndirectedGraph &g, const Limits &limits = {});
int chi_o_undirected(const UndirectedGraph &g, const Limits &limits = {});

struct UpperResult {
    std::optional<int> value;            ///< nullopt: no target up to max_order
    std::optional<OrientedGraph> target; ///< a tournament receiving every orientation
    std::uint64_t candidates_tested = 0;
};

/// Least order of one oriented graph receiving every orientation of g, searched up to
/// max_order. Candidates are tournaments up to isomorphism: any target extends to a tournament
/// on the same vertex set, so this is exhaustive.
UpperResult chi_o_plus(const UndirectedGraph &g, int max_order, const Limits &limits = {});

struct UniversalResult {
    int size = 0;
    OrientedGraph tournament; ///< smallest n-universal tournament found
};

/// Least order of a tournament containing every order-n tournament. Exhaustive over
/// tournament classes; n <= limits.max_universal_n.
UniversalResult universal_tournament_size(int n, const Limits &limits = {});

/// Exact value numerator/denominator * (sqrt 2 if times_sqrt2).
struct SurdValue {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;
    bool times_sqrt2 = false;

    double to_double() const;
    /// Six significant digits.
    std::string to_string() const;
    /// Exact comparisons against an integer.
    bool at_most(std::int64_t n) const;
    bool at_least(std::int64_t n) const;
    bool operator==(const SurdValue &) const = default;
};

struct BoundPair {
    SurdValue lower;
    SurdValue upper;
};

/// 2^((n-1)/2) <= eps(n) <= n 2^((n-1)/2) (odd n) or (3/(2 sqrt 2)) n 2^((n-1)/2) (even n).
/// Exact for 1 <= n <= 60.
BoundPair moon_bounds(int n);

/// Published upper bounds on chi_o^+ for graph classes. Data only.
struct CitedBounds {
    static constexpr int forest = 3;
    static constexpr int cycle = 4;
    static constexpr int cycle_five = 5;
    static constexpr int outerplanar = 7;
    static constexpr int two_outerplanar = 67;
    static constexpr int planar = 80;
    static constexpr int triangle_free_planar = 59;
    /// acyclic chromatic number at most a
    static constexpr std::int64_t acyclic(int a) { return std::int64_t{a} << (a - 1); }
    /// maximum degree k
    static constexpr std::int64_t max_degree(int k)
    {
        return 2 * std::int64_t{k} * k * (std::int64_t{1} << k);
    }
};

} // namespace orichrom
