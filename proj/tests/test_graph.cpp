#include "oracles.hpp"

#include "orichrom/error.hpp"
#include "orichrom/exact.hpp"
#include "orichrom/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace orichrom;

namespace {

std::vector<int> residues(std::initializer_list<int> r) { return r; }

} // namespace

TEST(Families, PathEdges)
{
    const auto p3 = path(3);
    EXPECT_EQ(p3.order(), 3);
    ASSERT_EQ(p3.size(), 2u);
    EXPECT_EQ(p3.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(p3.edges()[1], (Edge{1, 2}));
    EXPECT_EQ(path(1).size(), 0u);
    EXPECT_EQ(path(5).size(), 4u);
    EXPECT_THROW(path(0), InvalidArgument);
}

TEST(Families, CycleCompleteBipartite)
{
    EXPECT_EQ(complete(3).size(), 3u);
    EXPECT_EQ(complete_bipartite(2, 4).size(), 8u);
    const auto c5 = cycle(5);
    EXPECT_EQ(c5.size(), 5u);
    for (Vertex v = 0; v < 5; ++v)
        EXPECT_EQ(c5.degree(v), 2);
    EXPECT_THROW(cycle(2), InvalidArgument);
    EXPECT_THROW(complete(0), InvalidArgument);
    EXPECT_THROW(complete_bipartite(0, 3), InvalidArgument);

    const auto k23 = complete_bipartite(2, 3);
    for (Vertex x = 0; x < 2; ++x)
        for (Vertex y = 2; y < 5; ++y)
            EXPECT_TRUE(k23.adjacent(x, y));
    EXPECT_FALSE(k23.adjacent(0, 1));
    EXPECT_FALSE(k23.adjacent(2, 3));
}

TEST(Families, DirectedPath)
{
    const auto d = directed_path(3);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_TRUE(d.has_arc(0, 1));
    EXPECT_TRUE(d.has_arc(1, 2));
    EXPECT_EQ(directed_path(1).size(), 0u);
    EXPECT_TRUE(is_oriented_clique(directed_path(3)));
    EXPECT_FALSE(is_oriented_clique(directed_path(4)));
    EXPECT_THROW(directed_path(0), InvalidArgument);
}

TEST(Families, CirculantTournament)
{
    const auto t7 = circulant_tournament(7, residues({1, 2, 3}));
    EXPECT_TRUE(t7.has_arc(0, 1));
    EXPECT_FALSE(t7.has_arc(0, 4));
    EXPECT_TRUE(t7.has_arc(4, 0));
    EXPECT_TRUE(t7.has_arc(6, 0));
    EXPECT_TRUE(is_tournament(t7));
    EXPECT_EQ(t7.size(), 21u);

    const auto c3 = circulant_tournament(3, residues({1}));
    EXPECT_EQ(c3, directed_cycle(3));

    EXPECT_THROW(circulant_tournament(7, residues({1, 2})), InvalidArgument);
    EXPECT_THROW(circulant_tournament(7, residues({1, 6, 2, 3})), InvalidArgument);
    EXPECT_THROW(circulant_tournament(6, residues({1, 2, 3})), InvalidArgument);
    EXPECT_THROW(circulant_tournament(5, residues({0, 1, 2})), InvalidArgument);

    for (int n : {1, 3, 5, 9, 11}) {
        std::vector<int> half;
        for (int d = 1; d <= (n - 1) / 2; ++d)
            half.push_back(d);
        EXPECT_EQ(circulant_tournament(n, half).size(), static_cast<std::size_t>(n * (n - 1) / 2));
    }
}

TEST(Graphs, RejectsLoopsAndOppositeArcs)
{
    EXPECT_THROW(UndirectedGraph(3, {{1, 1}}), InvalidArgument);
    EXPECT_THROW(UndirectedGraph(3, {{0, 3}}), InvalidArgument);
    EXPECT_THROW(OrientedGraph(3, {{2, 2}}), InvalidArgument);
    EXPECT_THROW(OrientedGraph(3, {{0, 1}, {1, 0}}), AntisymmetryError);
    EXPECT_EQ(UndirectedGraph(3, {{1, 0}, {0, 1}}).size(), 1u);
    EXPECT_EQ(UndirectedGraph(0).order(), 0);
}

TEST(Square, Examples)
{
    const auto sq = square(path(4));
    EXPECT_EQ(sq.size(), 5u);
    EXPECT_TRUE(sq.adjacent(0, 2));
    EXPECT_TRUE(sq.adjacent(1, 3));
    EXPECT_FALSE(sq.adjacent(0, 3));
    EXPECT_EQ(square(complete(4)), complete(4));
    EXPECT_EQ(square(path(3)), complete(3));
}

TEST(Square, MatchesDistanceOracle)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.3, rng);
        const auto sq = square(g);
        const auto dist = oracle::distances(g);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v)
                if (u != v)
                    EXPECT_EQ(sq.adjacent(u, v), dist[u][v] <= 2);
        EXPECT_TRUE(sq.contains(g));
        EXPECT_TRUE(square(sq).contains(sq));
    }
}

TEST(Orientations, CountsDistinctAndUnderlying)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        const Orientations all(g);
        EXPECT_EQ(all.size(), std::uint64_t{1} << g.size());
        std::set<std::vector<Arc>> seen;
        const auto reference = oracle::all_orientations(g);
        for (std::uint64_t i = 0; i < all.size(); ++i) {
            const auto d = all[i];
            EXPECT_EQ(underlying(d), g);
            EXPECT_EQ(d, reference[i]);
            EXPECT_EQ(all.index_of(d), i);
            seen.insert({d.arcs().begin(), d.arcs().end()});
        }
        EXPECT_EQ(seen.size(), all.size());
    }
}

TEST(Orientations, CustomOrderAndCap)
{
    const auto g = path(3);
    const auto order = EdgeOrder::custom(g, {{1, 2}, {0, 1}});
    const Orientations all(g, order);
    EXPECT_TRUE(all[1].has_arc(2, 1));
    EXPECT_TRUE(all[1].has_arc(0, 1));
    EXPECT_THROW(EdgeOrder::custom(g, {{0, 1}}), InvalidArgument);
    EXPECT_THROW(EdgeOrder::custom(g, {{0, 1}, {0, 2}}), InvalidArgument);
    EXPECT_THROW(Orientations(complete(9), 30), CapExceeded);
    EXPECT_NO_THROW(Orientations(complete(8), 30));
    EXPECT_THROW(Orientations(path(5), 3), CapExceeded);
}

TEST(OrientedClique, ImpliesChiEqualsOrder)
{
    // every oriented graph on up to 4 vertices, then random ones on 5
    int cliques = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto kn = complete(n);
        const auto edges = kn.edges();
        for (std::uint32_t keep = 0; keep < (1U << edges.size()); ++keep) {
            std::vector<Edge> chosen;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if ((keep >> i) & 1)
                    chosen.push_back(edges[i]);
            for (const auto &d : oracle::all_orientations(UndirectedGraph(n, chosen)))
                if (is_oriented_clique(d)) {
                    ++cliques;
                    EXPECT_EQ(chi_o_oriented(d), n);
                }
        }
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d = oracle::random_oriented(5, 0.7, rng);
        if (is_oriented_clique(d)) {
            ++cliques;
            EXPECT_EQ(chi_o_oriented(d), 5);
        }
    }
    EXPECT_GT(cliques, 10);
}

TEST(OrientedClique, DefinitionOracle)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d = oracle::random_oriented(1 + static_cast<int>(rng() % 6), 0.6, rng);
        bool expected = true;
        for (Vertex u = 0; u < d.order(); ++u)
            for (Vertex v = u + 1; v < d.order(); ++v) {
                bool linked = d.adjacent(u, v);
                for (Vertex w = 0; w < d.order(); ++w)
                    linked = linked || (d.has_arc(u, w) && d.has_arc(w, v)) ||
                             (d.has_arc(v, w) && d.has_arc(w, u));
                expected = expected && linked;
            }
        EXPECT_EQ(is_oriented_clique(d), expected);
    }
}

TEST(LineDigraph, Examples)
{
    const auto l = line_digraph(directed_path(3));
    EXPECT_EQ(l.order(), 2);
    EXPECT_EQ(l.size(), 1u);
    EXPECT_TRUE(l.has_arc(0, 1));

    const auto c = line_digraph(directed_cycle(3));
    EXPECT_EQ(c.order(), 3);
    EXPECT_EQ(c.size(), 3u);
    EXPECT_TRUE(c.has_arc(0, 1) || c.has_arc(1, 0));

    EXPECT_EQ(line_digraph(OrientedGraph(4)).order(), 0);
}

TEST(LineDigraph, DefinitionOracle)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = oracle::random_oriented(6, 0.4, rng);
        const auto l = line_digraph(d);
        ASSERT_EQ(static_cast<std::size_t>(l.order()), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j)
                EXPECT_EQ(l.has_arc(i, j), i != j && d.arcs()[i].head == d.arcs()[j].tail);
    }
}
