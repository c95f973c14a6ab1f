#pragma once

#include "orichrom/graph.hpp"

#include <string_view>
#include <vector>

namespace orichrom {

enum class ProductKind { cartesian, strong, direct, lexicographic };

std::string_view to_string(ProductKind kind);
/// Accepts "cartesian", "strong", "direct", "lexicographic".
ProductKind parse_product_kind(std::string_view name);

/// Pair [u,v] of a product; u belongs to the left factor.
struct ProductVertex {
    Vertex left = 0;
    Vertex right = 0;
    auto operator<=>(const ProductVertex &) const = default;
};

/// Row-major flat indexing of V(G) x V(H): index = u * |V(H)| + v.
struct ProductShape {
    int left_order = 0;
    int right_order = 0;

    int order() const { return left_order * right_order; }
    Vertex index(ProductVertex p) const { return p.left * right_order + p.right; }
    Vertex index(Vertex u, Vertex v) const { return u * right_order + v; }
    ProductVertex split(Vertex flat) const { return {flat / right_order, flat % right_order}; }
};

UndirectedGraph product(ProductKind kind, const UndirectedGraph &g, const UndirectedGraph &h);
/// Same rules with arcs in place of edges.
OrientedGraph product(ProductKind kind, const OrientedGraph &g, const OrientedGraph &h);

/// Which factor a layer copies: `left` gives G_v = V(G) x {v}, `right` gives H_u = {u} x V(H).
enum class Side { left, right };

/// Flat product indices of a layer, in factor-vertex order.
std::vector<Vertex> layer_vertices(const ProductShape &shape, Side copy_of, Vertex fixed);

template <class Graph> struct Layer {
    Graph graph;                        ///< induced subgraph on the layer
    std::vector<Vertex> product_vertex; ///< factor vertex i sits at product_vertex[i]
};

/// Layer of a product. Lexicographic products only have right-side (H_u) layers.
Layer<UndirectedGraph> layer(ProductKind kind, const UndirectedGraph &g, const UndirectedGraph &h,
                             Side copy_of, Vertex fixed);
Layer<OrientedGraph> layer(ProductKind kind, const OrientedGraph &g, const OrientedGraph &h,
                           Side copy_of, Vertex fixed);

/// Layer of an arbitrary digraph living on a product vertex set (e.g. an orientation of G x H).
Layer<OrientedGraph> layer_of(const OrientedGraph &d, const ProductShape &shape, Side copy_of,
                              Vertex fixed);

} // namespace orichrom
