#include "orichrom/products.hpp"

#include "orichrom/error.hpp"

#include <string>

namespace orichrom {

std::string_view to_string(ProductKind kind)
{
    switch (kind) {
    case ProductKind::cartesian:
        return "cartesian";
    case ProductKind::strong:
        return "strong";
    case ProductKind::direct:
        return "direct";
    case ProductKind::lexicographic:
        return "lexicographic";
    }
    return "?";
}

ProductKind parse_product_kind(std::string_view name)
{
    for (auto kind : {ProductKind::cartesian, ProductKind::strong, ProductKind::direct,
                      ProductKind::lexicographic})
        if (name == to_string(kind))
            return kind;
    throw InvalidArgument("unknown product kind '" + std::string(name) + "'");
}

namespace {

// Adjacency test abstracted over the graph flavour: `joined(a, b)` is edge membership for
// undirected factors and arc membership (a -> b) for oriented ones.
template <class Joined1, class Joined2>
bool product_joined(ProductKind kind, ProductVertex p, ProductVertex q, Joined1 &&g_joined,
                    Joined2 &&h_joined)
{
    const bool same_u = p.left == q.left;
    const bool same_v = p.right == q.right;
    switch (kind) {
    case ProductKind::cartesian:
        return (same_u && h_joined(p.right, q.right)) || (same_v && g_joined(p.left, q.left));
    case ProductKind::strong:
        return (same_u && h_joined(p.right, q.right)) || (same_v && g_joined(p.left, q.left)) ||
               (g_joined(p.left, q.left) && h_joined(p.right, q.right));
    case ProductKind::direct:
        return g_joined(p.left, q.left) && h_joined(p.right, q.right);
    case ProductKind::lexicographic:
        return g_joined(p.left, q.left) || (same_u && h_joined(p.right, q.right));
    }
    return false;
}

} // namespace

UndirectedGraph product(ProductKind kind, const UndirectedGraph &g, const UndirectedGraph &h)
{
    const ProductShape shape{g.order(), h.order()};
    auto g_joined = [&](Vertex a, Vertex b) { return g.adjacent(a, b); };
    auto h_joined = [&](Vertex a, Vertex b) { return h.adjacent(a, b); };
    std::vector<Edge> edges;
    for (Vertex x = 0; x < shape.order(); ++x)
        for (Vertex y = x + 1; y < shape.order(); ++y)
            if (product_joined(kind, shape.split(x), shape.split(y), g_joined, h_joined))
                edges.push_back({x, y});
    return UndirectedGraph(shape.order(), std::move(edges));
}

OrientedGraph product(ProductKind kind, const OrientedGraph &g, const OrientedGraph &h)
{
    const ProductShape shape{g.order(), h.order()};
    auto g_joined = [&](Vertex a, Vertex b) { return g.has_arc(a, b); };
    auto h_joined = [&](Vertex a, Vertex b) { return h.has_arc(a, b); };
    std::vector<Arc> arcs;
    for (Vertex x = 0; x < shape.order(); ++x)
        for (Vertex y = 0; y < shape.order(); ++y)
            if (x != y && product_joined(kind, shape.split(x), shape.split(y), g_joined, h_joined))
                arcs.push_back({x, y});
    return OrientedGraph(shape.order(), std::move(arcs));
}

std::vector<Vertex> layer_vertices(const ProductShape &shape, Side copy_of, Vertex fixed)
{
    std::vector<Vertex> vertices;
    if (copy_of == Side::left) {
        if (fixed < 0 || fixed >= shape.right_order)
            throw InvalidArgument("layer vertex out of range");
        for (Vertex u = 0; u < shape.left_order; ++u)
            vertices.push_back(shape.index(u, fixed));
    } else {
        if (fixed < 0 || fixed >= shape.left_order)
            throw InvalidArgument("layer vertex out of range");
        for (Vertex v = 0; v < shape.right_order; ++v)
            vertices.push_back(shape.index(fixed, v));
    }
    return vertices;
}

namespace {

void check_layer_kind(ProductKind kind, Side copy_of)
{
    if (kind == ProductKind::lexicographic && copy_of == Side::left)
        throw InvalidArgument("lexicographic products only have copies of the right factor as "
                              "layers");
}

} // namespace

Layer<UndirectedGraph> layer(ProductKind kind, const UndirectedGraph &g, const UndirectedGraph &h,
                             Side copy_of, Vertex fixed)
{
    check_layer_kind(kind, copy_of);
    const ProductShape shape{g.order(), h.order()};
    auto vertices = layer_vertices(shape, copy_of, fixed);
    auto whole = product(kind, g, h);
    return {induced_subgraph(whole, vertices), std::move(vertices)};
}

Layer<OrientedGraph> layer(ProductKind kind, const OrientedGraph &g, const OrientedGraph &h,
                           Side copy_of, Vertex fixed)
{
    check_layer_kind(kind, copy_of);
    return layer_of(product(kind, g, h), ProductShape{g.order(), h.order()}, copy_of, fixed);
}

Layer<OrientedGraph> layer_of(const OrientedGraph &d, const ProductShape &shape, Side copy_of,
                              Vertex fixed)
{
    if (d.order() != shape.order())
        throw InvalidArgument("digraph order does not match the product shape");
    auto vertices = layer_vertices(shape, copy_of, fixed);
    return {induced_subgraph(d, vertices), std::move(vertices)};
}

} // namespace orichrom
