#include "oracles.hpp"

#include "orichrom/error.hpp"
#include "orichrom/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace orichrom;

TEST(ChromaticNumber, Examples)
{
    EXPECT_EQ(chromatic_number(cycle(5)), 3);
    EXPECT_EQ(chromatic_number(square(path(4))), 3);
    EXPECT_EQ(chromatic_number(UndirectedGraph(3)), 1);
    EXPECT_EQ(chromatic_number(UndirectedGraph(0)), 0);
    EXPECT_THROW(chromatic_number(path(13)), CapExceeded);
    Limits wide;
    wide.max_vertices = 20;
    EXPECT_EQ(chromatic_number(path(13), wide), 2);
}

TEST(ChromaticNumber, AgreesWithOracle)
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
        EXPECT_EQ(chromatic_number(g), oracle::chi(g));
        const auto c = optimal_proper_coloring(g);
        EXPECT_TRUE(verify_proper_coloring(g, c));
    }
}

TEST(ChiO, OrientedExamples)
{
    EXPECT_EQ(chi_o_oriented(directed_cycle(3)), 3);
    EXPECT_EQ(chi_o_oriented(directed_cycle(5)), 5);
    EXPECT_EQ(chi_o_oriented(OrientedGraph(1)), 1);
    EXPECT_EQ(chi_o_oriented(directed_path(3)), 3);
    EXPECT_EQ(chi_o_oriented(directed_path(2)), 2);
}

TEST(ChiO, OrientedAgreesWithOracle)
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 150; ++trial) {
        const auto d = oracle::random_oriented(1 + static_cast<int>(rng() % 6), 0.5, rng);
        EXPECT_EQ(chi_o_oriented(d), oracle::chi_o(d));
    }
}

TEST(ChiO, MonotoneUnderArcAddition)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const auto big = oracle::random_oriented(6, 0.6, rng);
        std::vector<Arc> some;
        for (const auto &a : big.arcs())
            if (rng() & 1)
                some.push_back(a);
        EXPECT_LE(chi_o_oriented(OrientedGraph(6, some)), chi_o_oriented(big));
    }
}

TEST(ChiO, UndirectedExamples)
{
    EXPECT_EQ(chi_o_undirected(cycle(3)), 3);
    EXPECT_EQ(chi_o_undirected(complete_bipartite(2, 4)), 6);
    EXPECT_EQ(chi_o_undirected(path(3)), 3);
    EXPECT_EQ(chi_o_undirected(UndirectedGraph(0)), 0);
}

TEST(ChiO, UndirectedAgreesWithOracle)
{
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        EXPECT_EQ(chi_o_undirected(g), oracle::chi_o_undirected(g));
    }
}

TEST(ChiO, SweepIndependentOfJobs)
{
    Limits one, three;
    three.jobs = 3;
    for (const auto &g : {cycle(6), complete_bipartite(2, 3), path(5), complete(4)}) {
        const auto a = chi_o_undirected_sweep(g, one);
        const auto b = chi_o_undirected_sweep(g, three);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.orientations, b.orientations);
        // the witness is the first orientation attaining the maximum
        const Orientations all(g);
        for (std::uint64_t i = 0; i < a.witness; ++i)
            EXPECT_LT(chi_o_oriented(all[i]), a.value);
        EXPECT_EQ(chi_o_oriented(all[a.witness]), a.value);
    }
}

TEST(ChiOPlus, Examples)
{
    EXPECT_EQ(chi_o_plus(cycle(3), 5).value, 4);
    EXPECT_EQ(chi_o_plus(path(3), 4).value, 3);
    EXPECT_EQ(chi_o_plus(cycle(5), 5).value, 5);
    const auto none = chi_o_plus(cycle(3), 3);
    EXPECT_FALSE(none.value);
    EXPECT_FALSE(none.target);
    EXPECT_THROW(chi_o_plus(cycle(3), 6), CapExceeded);
}

TEST(ChiOPlus, TargetReceivesEveryOrientation)
{
    for (const auto &g : {cycle(3), cycle(4), path(4), complete_bipartite(2, 2), complete(4)}) {
        const auto r = chi_o_plus(g, 5);
        ASSERT_TRUE(r.target);
        EXPECT_EQ(r.target->order(), *r.value);
        for (const auto &d : Orientations(g))
            EXPECT_TRUE(find_homomorphism(d, *r.target));
    }
}

TEST(ChiOPlus, AgreesWithLabelledSearch)
{
    // the oracle tries every labelled oriented graph of order k, not only tournaments
    auto oracle_plus = [](const UndirectedGraph &g, int max_order) -> std::optional<int> {
        const auto orientations = oracle::all_orientations(g);
        for (int k = 1; k <= max_order; ++k) {
            const auto kk = complete(k);
            const auto kn = kk.edges();
            // each pair: absent, forward, backward
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < kn.size(); ++i)
                total *= 3;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<Arc> arcs;
                auto rest = code;
                for (const auto &e : kn) {
                    const auto digit = rest % 3;
                    rest /= 3;
                    if (digit == 1)
                        arcs.push_back({e.u, e.v});
                    else if (digit == 2)
                        arcs.push_back({e.v, e.u});
                }
                const OrientedGraph t(k, arcs);
                bool all = true;
                for (const auto &d : orientations)
                    if (!oracle::hom_exists(d, t)) {
                        all = false;
                        break;
                    }
                if (all)
                    return k;
            }
        }
        return std::nullopt;
    };
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 12; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
        EXPECT_EQ(chi_o_plus(g, 4).value, oracle_plus(g, 4));
    }
}

TEST(ChiOPlus, BoundsAndHeredity)
{
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 15; ++trial) {
        const auto g = oracle::random_graph(2 + static_cast<int>(rng() % 4), 0.5, rng);
        const auto plus = chi_o_plus(g, 5);
        if (!plus.value)
            continue;
        EXPECT_LE(chi_o_undirected(g), *plus.value);
        std::vector<Edge> drop;
        for (const auto &e : g.edges())
            if (rng() & 1)
                drop.push_back(e);
        const auto sub = chi_o_plus(remove_edges(g, drop), 5);
        ASSERT_TRUE(sub.value);
        EXPECT_LE(*sub.value, *plus.value);
    }
}

TEST(ChiOPlus, IndependentOfJobs)
{
    Limits three;
    three.jobs = 3;
    for (const auto &g : {cycle(3), cycle(5), path(4)}) {
        const auto a = chi_o_plus(g, 5);
        const auto b = chi_o_plus(g, 5, three);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.target, b.target);
    }
}

TEST(Universal, AgreesWithOracle)
{
    for (int n = 1; n <= 4; ++n) {
        const auto r = universal_tournament_size(n);
        EXPECT_EQ(r.size, oracle::epsilon(n)) << "n=" << n;
        EXPECT_TRUE(oracle::is_universal(r.tournament, n));
    }
    EXPECT_EQ(universal_tournament_size(3).size, 4);
    EXPECT_THROW(universal_tournament_size(5), CapExceeded);
    EXPECT_THROW(universal_tournament_size(0), InvalidArgument);
}

TEST(Universal, MatchesChiOPlusOfCliques)
{
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(chi_o_plus(complete(n), 5).value, universal_tournament_size(n).size);
}

TEST(MoonBounds, Examples)
{
    const auto b5 = moon_bounds(5);
    EXPECT_EQ(b5.lower, (SurdValue{4, 1, false}));
    EXPECT_EQ(b5.upper, (SurdValue{20, 1, false}));
    const auto b1 = moon_bounds(1);
    EXPECT_EQ(b1.lower.to_double(), 1.0);
    EXPECT_EQ(b1.upper.to_double(), 1.0);
    const auto b4 = moon_bounds(4);
    EXPECT_EQ(b4.upper, (SurdValue{12, 1, false}));
    EXPECT_EQ(b4.lower, (SurdValue{2, 1, true}));
    EXPECT_EQ(b4.lower.to_string(), "2.82843");
    EXPECT_THROW(moon_bounds(0), InvalidArgument);
    EXPECT_THROW(moon_bounds(61), CapExceeded);
}

TEST(MoonBounds, ExactComparisons)
{
    const SurdValue root8{2, 1, true}; // 2 sqrt 2 = 2.828...
    EXPECT_TRUE(root8.at_most(3));
    EXPECT_FALSE(root8.at_most(2));
    EXPECT_TRUE(root8.at_least(2));
    EXPECT_FALSE(root8.at_least(3));
    const SurdValue half{1, 2, false};
    EXPECT_TRUE(half.at_most(1));
    EXPECT_FALSE(half.at_least(1));
}

TEST(MoonBounds, FormulaOracle)
{
    for (int n = 1; n <= 60; ++n) {
        const auto b = moon_bounds(n);
        const long double lower = std::pow(2.0L, (n - 1) / 2.0L);
        const long double upper = n % 2 ? n * lower : 3.0L / (2.0L * std::sqrt(2.0L)) * n * lower;
        EXPECT_NEAR(b.lower.to_double() / lower, 1.0, 1e-12) << n;
        EXPECT_NEAR(b.upper.to_double() / upper, 1.0, 1e-12) << n;
        EXPECT_LE(b.lower.to_double(), b.upper.to_double());
    }
}

TEST(CitedBounds, Table)
{
    EXPECT_EQ(CitedBounds::forest, 3);
    EXPECT_EQ(CitedBounds::outerplanar, 7);
    EXPECT_EQ(CitedBounds::planar, 80);
    EXPECT_EQ(CitedBounds::acyclic(3), 12);
    EXPECT_EQ(CitedBounds::max_degree(3), 144);
}
