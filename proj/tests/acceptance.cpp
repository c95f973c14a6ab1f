// Acceptance run: one line per criterion, exit status 1 if any selected criterion fails.
//   acceptance            all criteria
//   acceptance 4 11       only criteria 4 and 11
#include "orichrom/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

int main(int argc, char **argv)
{
    const auto &names = orichrom::check_names();
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > static_cast<int>(names.size())) {
            std::fprintf(stderr, "usage: %s [criterion 1..%zu]...\n", argv[0], names.size());
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (int n = 1; n <= static_cast<int>(names.size()); ++n)
            selected.push_back(n);

    // budgets are for a single core
    orichrom::VerifyOptions options;
    options.limits.jobs = 1;

    bool all = true;
    for (int n : selected) {
        const auto &name = names[n - 1];
        try {
            const auto r = orichrom::run_check(name, options);
            all = all && r.passed();
            std::printf("criterion %2d %-16s %s  %s (%.2fs / %.0fs)\n", n, name.c_str(),
                        r.passed() ? "PASS" : "FAIL", r.summary.c_str(), r.elapsed_s,
                        r.budget_s);
            if (r.correct && !r.within_budget())
                std::printf("             over the runtime budget\n");
        } catch (const std::exception &e) {
            all = false;
            std::printf("criterion %2d %-16s FAIL  error: %s\n", n, name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
