#include "orichrom/exact.hpp"

#include "orichrom/canonical.hpp"
#include "orichrom/error.hpp"
#include "orichrom/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace orichrom {

namespace {

void check_vertex_cap(int order, const Limits &limits)
{
    if (order > limits.max_vertices)
        throw CapExceeded("exact solver limited to " + std::to_string(limits.max_vertices) +
                          " vertices, got " + std::to_string(order));
}

} // namespace

VertexMap optimal_proper_coloring(const UndirectedGraph &g, const Limits &limits)
{
    check_vertex_cap(g.order(), limits);
    for (int k = 0;; ++k)
        if (auto c = find_proper_coloring(g, k))
            return *c;
}

int chromatic_number(const UndirectedGraph &g, const Limits &limits)
{
    const auto c = optimal_proper_coloring(g, limits);
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

VertexMap optimal_oriented_coloring(const OrientedGraph &d, const Limits &limits)
{
    check_vertex_cap(d.order(), limits);
    for (int k = 0;; ++k)
        if (auto c = find_oriented_coloring(d, k))
            return *c;
}

int chi_o_oriented(const OrientedGraph &d, const Limits &limits)
{
    const auto c = optimal_oriented_coloring(d, limits);
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

SweepResult chi_o_undirected_sweep(const UndirectedGraph &g, const Limits &limits)
{
    check_vertex_cap(g.order(), limits);
    const Orientations all(g, limits.max_edges);
    const int ceiling = g.order();

    struct Local {
        int value = -1;
        std::uint64_t witness = 0;
    };
    std::vector<Local> locals(static_cast<std::size_t>(std::max(1, limits.jobs)));

    parallel_chunks(all.size(), limits.jobs, [&](int worker, std::uint64_t begin, std::uint64_t end) {
        Local best;
        for (auto i = begin; i < end && best.value < ceiling; ++i) {
            const auto d = all[i];
            // Only orientations beating the running maximum need an exact value.
            if (best.value >= 0 && find_oriented_coloring(d, best.value))
                continue;
            best.value = chi_o_oriented(d, limits);
            best.witness = i;
        }
        locals[worker] = best;
    });

    SweepResult result;
    result.orientations = all.size();
    result.value = -1;
    for (const auto &l : locals) {
        if (l.value > result.value || (l.value == result.value && l.witness < result.witness)) {
            result.value = l.value;
            result.witness = l.witness;
        }
    }
    return result;
}

int chi_o_undirected(const UndirectedGraph &g, const Limits &limits)
{
    return chi_o_undirected_sweep(g, limits).value;
}

UpperResult chi_o_plus(const UndirectedGraph &g, int max_order, const Limits &limits)
{
    if (max_order > limits.max_target_order)
        throw CapExceeded("target order " + std::to_string(max_order) +
                          " exceeds the enumeration cap " + std::to_string(limits.max_target_order));
    if (max_order > 8)
        throw CapExceeded("target enumeration is limited to order 8");

    const Orientations all(g, limits.max_edges);
    UpperResult result;
    if (g.order() == 0) {
        result.value = 0;
        result.target = OrientedGraph(0);
        return result;
    }

    // materialise small sweeps; large ones are rebuilt per test
    std::vector<OrientedGraph> stored;
    if (all.size() <= (std::uint64_t{1} << 16))
        for (auto d : all)
            stored.push_back(std::move(d));
    auto orientation = [&](std::uint64_t i) { return stored.empty() ? all[i] : stored[i]; };

    for (int k = 1; k <= max_order; ++k) {
        const auto candidates = tournament_classes(k);
        constexpr auto none = std::numeric_limits<std::uint64_t>::max();
        std::vector<std::uint64_t> first_success(static_cast<std::size_t>(std::max(1, limits.jobs)),
                                                 none);
        std::vector<std::uint64_t> tested(first_success.size(), 0);

        parallel_chunks(candidates.size(), limits.jobs,
                        [&](int worker, std::uint64_t begin, std::uint64_t end) {
                            std::uint64_t last_failure = 0;
                            for (auto c = begin; c < end; ++c) {
                                ++tested[worker];
                                const auto &target = candidates[c];
                                // retry the orientation that sank the previous candidate first
                                if (!find_homomorphism(orientation(last_failure), target))
                                    continue;
                                bool all_map = true;
                                for (std::uint64_t i = 0; i < all.size(); ++i) {
                                    if (i == last_failure)
                                        continue;
                                    if (!find_homomorphism(orientation(i), target)) {
                                        last_failure = i;
                                        all_map = false;
                                        break;
                                    }
                                }
                                if (all_map) {
                                    first_success[worker] = c;
                                    return;
                                }
                            }
                        });

        result.candidates_tested += std::accumulate(tested.begin(), tested.end(), std::uint64_t{0});
        const auto winner = *std::min_element(first_success.begin(), first_success.end());
        if (winner != none) {
            result.value = k;
            result.target = candidates[winner];
            return result;
        }
    }
    return result;
}

UniversalResult universal_tournament_size(int n, const Limits &limits)
{
    if (n < 1)
        throw InvalidArgument("universal tournament size needs n >= 1");
    if (n > limits.max_universal_n)
        throw CapExceeded("universal tournament search limited to n <= " +
                          std::to_string(limits.max_universal_n));

    std::set<std::vector<bool>> required;
    for (const auto &t : tournament_classes(n))
        required.insert(canonical_code(t));

    const auto bounds = moon_bounds(n);
    for (int size = n;; ++size) {
        if (size > 8)
            throw CapExceeded("universal tournament search needs tournaments above order 8");
        for (const auto &host : tournament_classes(size)) {
            std::set<std::vector<bool>> seen;
            std::vector<Vertex> subset(static_cast<std::size_t>(n));
            std::iota(subset.begin(), subset.end(), 0);
            // walk all n-subsets of the host in lexicographic order
            while (true) {
                seen.insert(canonical_code(induced_subgraph(host, subset)));
                if (seen.size() == required.size())
                    break;
                int i = n - 1;
                while (i >= 0 && subset[i] == size - n + i)
                    --i;
                if (i < 0)
                    break;
                ++subset[i];
                for (int j = i + 1; j < n; ++j)
                    subset[j] = subset[j - 1] + 1;
            }
            if (seen.size() == required.size())
                return {size, host};
        }
        if (bounds.upper.at_most(size))
            throw std::logic_error("no universal tournament within the Moon upper bound");
    }
}

namespace {

__extension__ typedef __int128 Wide;

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

SurdValue reduced(std::int64_t num, std::int64_t den, bool sqrt2)
{
    const auto g = std::gcd(num, den);
    return {num / g, den / g, sqrt2};
}

} // namespace

double SurdValue::to_double() const
{
    const double base = static_cast<double>(numerator) / static_cast<double>(denominator);
    return times_sqrt2 ? base * std::sqrt(2.0) : base;
}

std::string SurdValue::to_string() const
{
    std::ostringstream out;
    out << std::setprecision(6) << to_double();
    return out.str();
}

bool SurdValue::at_most(std::int64_t n) const
{

    if (!times_sqrt2)
        return Wide{numerator} <= Wide{n} * denominator;
    if (n < 0)
        return false;
    return 2 * Wide{numerator} * numerator <= Wide{n} * n * denominator * denominator;
}

bool SurdValue::at_least(std::int64_t n) const
{

    if (!times_sqrt2)
        return Wide{numerator} >= Wide{n} * denominator;
    if (n <= 0)
        return true;
    return 2 * Wide{numerator} * numerator >= Wide{n} * n * denominator * denominator;
}

BoundPair moon_bounds(int n)
{
    if (n < 1)
        throw InvalidArgument("moon_bounds needs n >= 1");
    if (n > 60)
        throw CapExceeded("moon_bounds is exact only for n <= 60");
    BoundPair b;
    if (n % 2 == 1) {
        const auto base = pow2((n - 1) / 2);
        b.lower = {base, 1, false};
        b.upper = {n * base, 1, false};
    } else {
        // 2^((n-1)/2) = 2^((n-2)/2) * sqrt 2;  3/(2 sqrt 2) * n * 2^((n-1)/2) = 3n 2^(n/2) / 4
        b.lower = {pow2((n - 2) / 2), 1, true};
        b.upper = reduced(3 * std::int64_t{n} * pow2(n / 2), 4, false);
    }
    return b;
}

} // namespace orichrom
