#pragma once

#include "orichrom/graph.hpp"
#include "orichrom/homomorphism.hpp"
#include "orichrom/limits.hpp"
#include "orichrom/products.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orichrom {

/// Decoded name of a target vertex. Tagged labels ("a" / "b") carry 1-based indices, tuple
/// labels (empty tag) carry 1-based coordinates with 0 reserved for sentinels and bits.
struct VertexLabel {
    std::string tag;
    std::vector<int> coords;

    /// "a1", "b{1,2}", "b{}" or "[1,2,0,3]".
    std::string to_string() const;
    bool operator==(const VertexLabel &) const = default;
};

/// Target graph whose vertices carry the labels of the construction that built it.
struct StructuredTarget {
    OrientedGraph graph;
    std::vector<VertexLabel> labels;

    int order() const { return graph.order(); }
};

// ---------------------------------------------------------------------------------------------
// Complete bipartite graphs.

/// Vertices a_1..a_m (indices 0..m-1) then b_S (index m + S, S a bitmask over 0..m-1).
/// a_i -> b_S when i is in S, b_S -> a_i otherwise; no arcs inside either side.
StructuredTarget bipartite_target(int m);

/// x_i -> a_i, y_j -> b_{N^-(y_j)}. `d` must be an orientation of complete_bipartite(m, n).
VertexMap bipartite_hom(const OrientedGraph &d, int m, int n);

/// x_i -> y_j iff j < 2^m and i is in S_j (S_j = bitmask j), otherwise y_j -> x_i.
OrientedGraph bipartite_tight_orientation(int m, int n);

// ---------------------------------------------------------------------------------------------
// Colourings from a colouring of the square.

/// Number of labels [a, b_1..b_{a-1}] for a square colouring with k colours: 2^k - 1.
std::int64_t square_palette_size(int k);
VertexLabel square_palette_label(int index);

/// Oriented colouring of an orientation `d` of g from a proper colouring `sigma` of g^2
/// (colours 0..k-1). Colour ids index the palette: block a (1-based) starts at 2^(a-1) - 1 and
/// bit i-1 of the offset records an in-neighbour coloured i.
VertexMap square_coloring(const UndirectedGraph &g, const VertexMap &sigma,
                          const OrientedGraph &d);

// ---------------------------------------------------------------------------------------------
// Product homomorphisms.

/// [u,v] -> [alpha(u), beta(v)] from product(kind, d, e) to product(kind, t, u).
/// `kind` must be cartesian, strong or lexicographic.
VertexMap product_hom_compose(ProductKind kind, const OrientedGraph &d, const OrientedGraph &e,
                              const OrientedGraph &t, const OrientedGraph &u,
                              const VertexMap &alpha, const VertexMap &beta);

/// [u,v] -> u (Side::left) or v (Side::right) from product(direct, d, e) onto that factor.
VertexMap projection_hom(Side onto, const OrientedGraph &d, const OrientedGraph &e);

/// Homomorphism of product(strong, DP_k, DP_l) into circulant_tournament(7, {1,2,3}):
/// [x_i, y_j] -> 2j + i mod 7 with 1-based i, j.
VertexMap t7_strong_grid_hom(int k, int l);

/// Homomorphism of product(cartesian, p, q) into the directed 3-cycle 0->1->2->0 for oriented
/// paths p, q (vertex order along the path): start at 0, step +1 along an arc and -1 against it.
VertexMap c3_cartesian_path_hom(const OrientedGraph &p, const OrientedGraph &q);

// ---------------------------------------------------------------------------------------------
// Upper targets for products of undirected graphs. Each *_upper_hom maps an orientation of the
// product (on ProductShape{|G|, |H|} indices) into the matching *_upper_target. Per-layer
// homomorphisms left empty are found with find_homomorphism; supplied ones are verified.

/// Closed-form orders.
std::int64_t lexico_upper_order(int k, int l, int n);
std::int64_t strong_upper_order(int k, int l, int m, int n);
std::int64_t cartesian_upper_order(int k, int t_order, int u_order);
/// Vertex count of direct_upper_target(k, l): l * (2^(k(l-1)) - 1) / (2^(l-1) - 1).
std::int64_t direct_upper_order(int k, int l);
/// The closed form (2^(k(l-1)) - 1) / (2^(l-1) - 1) without the factor l.
std::int64_t direct_upper_order_formula(int k, int l);

struct LexicoFactorData {
    UndirectedGraph g;
    UndirectedGraph h;
    VertexMap g_square_coloring; ///< proper on square(g), colours 0..k-1
    OrientedGraph u_target;      ///< receives every orientation of h
    std::vector<VertexMap> h_layer_homs; ///< per u: H_u -> u_target (optional)
};

/// Vertices [a, b, c_1..c_k]: a < k, b < |U|, c_i < n + 2^n for i != a, c_a = 0 (sentinel).
/// Arc iff a = a' and (b,b') in U, or a != a' and (c_{a'}, c'_a) in bipartite_target(n).
StructuredTarget lexico_upper_target(int k, const OrientedGraph &u_target, int n,
                                     const Limits &limits = {});
VertexMap lexico_upper_hom(const OrientedGraph &orientation, const LexicoFactorData &data);

struct StrongFactorData {
    UndirectedGraph g;
    UndirectedGraph h;
    VertexMap g_coloring;        ///< proper on g, l colours
    VertexMap h_square_coloring; ///< proper on square(h), k colours
    OrientedGraph g_target;      ///< T, receives every orientation of g
    OrientedGraph h_target;      ///< U, receives every orientation of h
    std::vector<VertexMap> g_layer_homs; ///< per v: G_v -> T (optional)
    std::vector<VertexMap> h_layer_homs; ///< per u: H_u -> U (optional)
};

/// Vertices [alpha, beta, mu, lambda, c_1..c_{beta-1}] with alpha < l, beta in 1..k, mu in T,
/// lambda in U, binary c. Arc iff (i) alpha = alpha', (lambda,lambda') in U; (ii) alpha != alpha',
/// beta = beta', (mu,mu') in T; (iii) alpha != alpha', beta < beta', c'_beta = 1;
/// (iv) alpha != alpha', beta > beta', c_{beta'} = 0.
StructuredTarget strong_upper_target(int k, int l, const OrientedGraph &g_target,
                                     const OrientedGraph &h_target, const Limits &limits = {});
/// Throws PremiseViolation when two cross arcs at [u,v] demand opposite values for the same
/// c-bit (possible whenever u has two neighbours in g).
VertexMap strong_upper_hom(const OrientedGraph &orientation, const StrongFactorData &data);

struct CartesianFactorData {
    UndirectedGraph g;
    UndirectedGraph h;
    VertexMap h_coloring;     ///< proper on h, k colours
    OrientedGraph g_target;   ///< T
    OrientedGraph h_target;   ///< U
    std::vector<VertexMap> g_layer_homs; ///< per v: G_v -> T (optional)
    std::vector<VertexMap> h_layer_homs; ///< per u: H_u -> U (optional)
};

/// Vertices [c, a, b] with c < k, a in T, b in U. Arc iff c = c' and (a,a') in T, or c != c'
/// and (b,b') in U.
StructuredTarget cartesian_upper_target(int k, const OrientedGraph &g_target,
                                        const OrientedGraph &h_target, const Limits &limits = {});
/// [u,v] -> [lambda(v), alpha_v(u), beta_u(v)] with lambda the colouring of h.
VertexMap cartesian_upper_hom(const OrientedGraph &orientation, const CartesianFactorData &data);

struct DirectFactorData {
    UndirectedGraph g;
    UndirectedGraph h;
    VertexMap g_square_coloring; ///< proper on square(g), k colours
    VertexMap h_square_coloring; ///< proper on square(h), l colours
};

/// Vertices [alpha, beta, c_{i,j}] with alpha in 1..k, beta in 1..l and a bit c_{i,j} for every
/// i < alpha, j in 1..l, where c_{i,beta} = 0. For alpha < alpha' the arc between X and Y is
/// decided by Y's bit at (alpha, beta): X -> Y iff that bit equals [beta < beta'].
StructuredTarget direct_upper_target(int k, int l, const Limits &limits = {});
VertexMap direct_upper_hom(const OrientedGraph &orientation, const DirectFactorData &data);

} // namespace orichrom
