#include "oracles.hpp"

#include "orichrom/canonical.hpp"
#include "orichrom/error.hpp"
#include "orichrom/products.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orichrom;

namespace {

constexpr ProductKind all_kinds[] = {ProductKind::cartesian, ProductKind::strong,
                                     ProductKind::direct, ProductKind::lexicographic};

/// Edge rule written out per kind, on factor adjacency predicates.
template <class AdjG, class AdjH>
bool rule(ProductKind kind, Vertex u, Vertex v, Vertex u2, Vertex v2, AdjG g, AdjH h)
{
    const bool gu = g(u, u2), hv = h(v, v2);
    switch (kind) {
    case ProductKind::cartesian:
        return (u == u2 && hv) || (v == v2 && gu);
    case ProductKind::strong:
        return (u == u2 && hv) || (v == v2 && gu) || (gu && hv);
    case ProductKind::direct:
        return gu && hv;
    case ProductKind::lexicographic:
        return gu || (u == u2 && hv);
    }
    return false;
}

} // namespace

TEST(Products, KindNames)
{
    for (auto kind : all_kinds)
        EXPECT_EQ(parse_product_kind(to_string(kind)), kind);
    EXPECT_THROW(parse_product_kind("tensor"), InvalidArgument);
}

TEST(Products, SmallExamples)
{
    const auto k2 = complete(2);
    const auto c = product(ProductKind::cartesian, k2, k2);
    EXPECT_EQ(c, UndirectedGraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(product(ProductKind::strong, k2, k2), complete(4));
    EXPECT_EQ(product(ProductKind::direct, k2, k2), UndirectedGraph(4, {{0, 3}, {1, 2}}));
    const auto lex = product(ProductKind::lexicographic, k2, k2);
    EXPECT_EQ(lex, complete(4));
    EXPECT_EQ(lex.size(), 6u);
}

TEST(Products, OrientedExamples)
{
    const auto d = product(ProductKind::direct, directed_path(2), directed_path(2));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_TRUE(d.has_arc(0, 3));

    const int k = 4, l = 5;
    const auto s = product(ProductKind::strong, directed_path(k), directed_path(l));
    const ProductShape shape{k, l};
    std::size_t expected = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            for (auto [di, dj] : {std::pair{1, 0}, {0, 1}, {1, 1}})
                if (i + di < k && j + dj < l) {
                    EXPECT_TRUE(s.has_arc(shape.index(i, j), shape.index(i + di, j + dj)));
                    ++expected;
                }
        }
    EXPECT_EQ(s.size(), expected);
}

TEST(Products, ShapeIndexing)
{
    const ProductShape shape{3, 4};
    EXPECT_EQ(shape.order(), 12);
    for (Vertex x = 0; x < 12; ++x)
        EXPECT_EQ(shape.index(shape.split(x)), x);
    EXPECT_EQ(shape.index(2, 1), 9);
}

TEST(Products, EdgeRuleOracle)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        const auto h = oracle::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        const ProductShape shape{g.order(), h.order()};
        auto ag = [&](Vertex a, Vertex b) { return g.adjacent(a, b); };
        auto ah = [&](Vertex a, Vertex b) { return h.adjacent(a, b); };
        for (auto kind : all_kinds) {
            const auto p = product(kind, g, h);
            for (Vertex x = 0; x < shape.order(); ++x)
                for (Vertex y = 0; y < shape.order(); ++y) {
                    if (x == y)
                        continue;
                    const auto [u, v] = shape.split(x);
                    const auto [u2, v2] = shape.split(y);
                    EXPECT_EQ(p.adjacent(x, y), rule(kind, u, v, u2, v2, ag, ah));
                }
        }
    }
}

TEST(Products, OrientedArcRuleOracle)
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = oracle::random_oriented(1 + static_cast<int>(rng() % 5), 0.5, rng);
        const auto e = oracle::random_oriented(1 + static_cast<int>(rng() % 5), 0.5, rng);
        const ProductShape shape{d.order(), e.order()};
        auto ad = [&](Vertex a, Vertex b) { return d.has_arc(a, b); };
        auto ae = [&](Vertex a, Vertex b) { return e.has_arc(a, b); };
        for (auto kind : all_kinds) {
            const auto p = product(kind, d, e);
            for (Vertex x = 0; x < shape.order(); ++x)
                for (Vertex y = 0; y < shape.order(); ++y) {
                    if (x == y)
                        continue;
                    const auto [u, v] = shape.split(x);
                    const auto [u2, v2] = shape.split(y);
                    EXPECT_EQ(p.has_arc(x, y), rule(kind, u, v, u2, v2, ad, ae));
                }
            // forgetting directions commutes with the product only when one factor is held
            // fixed in every edge; strong and direct drop the crossed pairs
            const auto plain = product(kind, underlying(d), underlying(e));
            if (kind == ProductKind::cartesian || kind == ProductKind::lexicographic)
                EXPECT_TRUE(underlying(p) == plain);
            else
                EXPECT_TRUE(plain.contains(underlying(p)));
        }
    }
}

TEST(Products, EdgeCountsAndContainments)
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        const auto h = oracle::random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        const std::size_t vg = g.order(), vh = h.order(), eg = g.size(), eh = h.size();
        const auto c = product(ProductKind::cartesian, g, h);
        const auto s = product(ProductKind::strong, g, h);
        const auto d = product(ProductKind::direct, g, h);
        const auto l = product(ProductKind::lexicographic, g, h);
        EXPECT_EQ(c.size(), eg * vh + vg * eh);
        EXPECT_EQ(s.size(), eg * vh + vg * eh + 2 * eg * eh);
        EXPECT_EQ(d.size(), 2 * eg * eh);
        EXPECT_EQ(l.size(), eg * vh * vh + vg * eh);
        EXPECT_TRUE(s.contains(c));
        EXPECT_TRUE(s.contains(d));
        EXPECT_TRUE(l.contains(s));
    }
}

TEST(Products, SymmetryUpToSwap)
{
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
        const auto h = oracle::random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
        const ProductShape gh{g.order(), h.order()}, hg{h.order(), g.order()};
        for (auto kind : {ProductKind::cartesian, ProductKind::strong, ProductKind::direct}) {
            const auto a = product(kind, g, h);
            const auto b = product(kind, h, g);
            for (const auto &e : a.edges()) {
                const auto p = gh.split(e.u), q = gh.split(e.v);
                EXPECT_TRUE(b.adjacent(hg.index(p.right, p.left), hg.index(q.right, q.left)));
            }
            EXPECT_EQ(a.size(), b.size());
        }
    }
    // the lexicographic product is not symmetric
    EXPECT_NE(product(ProductKind::lexicographic, path(3), complete(2)).size(),
              product(ProductKind::lexicographic, complete(2), path(3)).size());
}

TEST(Layers, Examples)
{
    const auto l = layer(ProductKind::cartesian, path(3), path(2), Side::left, 0);
    EXPECT_EQ(l.graph, path(3));
    EXPECT_EQ(l.product_vertex, (std::vector<Vertex>{0, 2, 4}));

    const auto d = layer(ProductKind::direct, complete(2), complete(2), Side::left, 0);
    EXPECT_EQ(d.graph.order(), 2);
    EXPECT_EQ(d.graph.size(), 0u);

    const auto s = layer(ProductKind::strong, path(3), path(3), Side::right, 1);
    EXPECT_EQ(s.graph, path(3));
    EXPECT_EQ(s.product_vertex, (std::vector<Vertex>{3, 4, 5}));

    EXPECT_THROW(layer(ProductKind::cartesian, path(3), path(2), Side::left, 2), InvalidArgument);
    EXPECT_THROW(layer(ProductKind::lexicographic, path(3), path(2), Side::left, 0), InvalidArgument);
    EXPECT_NO_THROW(layer(ProductKind::lexicographic, path(3), path(2), Side::right, 0));
}

TEST(Layers, OrientedLayersCopyFactors)
{
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = oracle::random_oriented(1 + static_cast<int>(rng() % 5), 0.6, rng);
        const auto e = oracle::random_oriented(1 + static_cast<int>(rng() % 5), 0.6, rng);
        for (auto kind : {ProductKind::cartesian, ProductKind::strong}) {
            for (Vertex v = 0; v < e.order(); ++v)
                EXPECT_EQ(layer(kind, d, e, Side::left, v).graph, d);
            for (Vertex u = 0; u < d.order(); ++u)
                EXPECT_EQ(layer(kind, d, e, Side::right, u).graph, e);
        }
        const auto p = product(ProductKind::strong, d, e);
        const ProductShape shape{d.order(), e.order()};
        for (Vertex u = 0; u < d.order(); ++u)
            EXPECT_EQ(layer_of(p, shape, Side::right, u).graph, e);
    }
}

TEST(Products, CrossedArcsAreDropped)
{
    const OrientedGraph up(2, {{0, 1}}), down(2, {{1, 0}});
    const auto direct = product(ProductKind::direct, up, down);
    EXPECT_EQ(direct, OrientedGraph(4, {{1, 2}}));
    EXPECT_EQ(product(ProductKind::direct, complete(2), complete(2)).size(), 2u);
    EXPECT_EQ(product(ProductKind::strong, up, down).size(), 5u);
}
