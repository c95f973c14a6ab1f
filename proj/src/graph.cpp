#include "orichrom/graph.hpp"

#include "orichrom/error.hpp"

#include <algorithm>
#include <string>

namespace orichrom {

namespace {

void check_order(int order)
{
    if (order < 0)
        throw InvalidArgument("graph order must be non-negative");
}

void check_endpoint(int order, Vertex v)
{
    if (v < 0 || v >= order)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order));
}

} // namespace

UndirectedGraph::UndirectedGraph(int order) : UndirectedGraph(order, {}) {}

UndirectedGraph::UndirectedGraph(int order, std::vector<Edge> edges) : n_(order)
{
    check_order(order);
    for (auto &e : edges) {
        check_endpoint(order, e.u);
        check_endpoint(order, e.v);
        if (e.u == e.v)
            throw InvalidArgument("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(static_cast<std::size_t>(n_), {});
    matrix_.assign(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(n_)));
    for (const auto &e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        matrix_[e.u].set(e.v);
        matrix_[e.v].set(e.u);
    }
    for (auto &row : adj_)
        std::sort(row.begin(), row.end());
}

bool UndirectedGraph::contains(const UndirectedGraph &other) const
{
    if (other.n_ != n_)
        return false;
    return std::all_of(other.edges_.begin(), other.edges_.end(),
                       [&](const Edge &e) { return adjacent(e.u, e.v); });
}

OrientedGraph::OrientedGraph(int order) : OrientedGraph(order, {}) {}

OrientedGraph::OrientedGraph(int order, std::vector<Arc> arcs) : n_(order)
{
    check_order(order);
    for (const auto &a : arcs) {
        check_endpoint(order, a.tail);
        check_endpoint(order, a.head);
        if (a.tail == a.head)
            throw InvalidArgument("loop at vertex " + std::to_string(a.tail));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);

    const auto n = static_cast<std::size_t>(n_);
    out_.assign(n, {});
    in_.assign(n, {});
    out_matrix_.assign(n, Bitset(n));
    in_matrix_.assign(n, Bitset(n));
    for (const auto &a : arcs_) {
        if (out_matrix_[a.head].test(a.tail))
            throw AntisymmetryError("opposite arcs between " + std::to_string(a.tail) + " and " +
                                    std::to_string(a.head));
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
        out_matrix_[a.tail].set(a.head);
        in_matrix_[a.head].set(a.tail);
    }
    for (auto &row : in_)
        std::sort(row.begin(), row.end());
}

bool OrientedGraph::contains(const OrientedGraph &other) const
{
    if (other.n_ != n_)
        return false;
    return std::all_of(other.arcs_.begin(), other.arcs_.end(),
                       [&](const Arc &a) { return has_arc(a.tail, a.head); });
}

EdgeOrder EdgeOrder::lexicographic(const UndirectedGraph &g)
{
    EdgeOrder order;
    order.edges_.assign(g.edges().begin(), g.edges().end());
    return order;
}

EdgeOrder EdgeOrder::custom(const UndirectedGraph &g, std::vector<Edge> edges)
{
    for (auto &e : edges)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), g.edges().begin(), g.edges().end()))
        throw InvalidArgument("edge order is not a permutation of the edge set");
    EdgeOrder order;
    order.edges_ = std::move(edges);
    return order;
}

Orientations::Orientations(const UndirectedGraph &g, int max_edges)
    : Orientations(g, EdgeOrder::lexicographic(g), max_edges)
{
}

Orientations::Orientations(const UndirectedGraph &g, EdgeOrder order, int max_edges)
    : n_(g.order()), order_(std::move(order))
{
    const int cap = std::min(max_edges, 62);
    if (static_cast<int>(order_.size()) > cap)
        throw CapExceeded("orientation enumeration over " + std::to_string(order_.size()) +
                          " edges exceeds the cap of " + std::to_string(cap));
}

OrientedGraph Orientations::operator[](std::uint64_t index) const
{
    std::vector<Arc> arcs;
    arcs.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const auto &e = order_.edges()[i];
        if ((index >> i) & 1U)
            arcs.push_back({e.v, e.u});
        else
            arcs.push_back({e.u, e.v});
    }
    return OrientedGraph(n_, std::move(arcs));
}

std::uint64_t Orientations::index_of(const OrientedGraph &d) const
{
    if (d.order() != n_ || d.size() != order_.size())
        throw InvalidArgument("digraph is not an orientation of this graph");
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const auto &e = order_.edges()[i];
        if (d.has_arc(e.v, e.u))
            index |= std::uint64_t{1} << i;
        else if (!d.has_arc(e.u, e.v))
            throw InvalidArgument("digraph is not an orientation of this graph");
    }
    return index;
}

UndirectedGraph path(int k)
{
    if (k < 1)
        throw InvalidArgument("path needs at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.push_back({i, i + 1});
    return UndirectedGraph(k, std::move(edges));
}

UndirectedGraph cycle(int k)
{
    if (k < 3)
        throw InvalidArgument("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back({i, (i + 1) % k});
    return UndirectedGraph(k, std::move(edges));
}

UndirectedGraph complete(int n)
{
    if (n < 1)
        throw InvalidArgument("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw InvalidArgument("complete bipartite graph needs non-empty parts");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            edges.push_back({i, m + j});
    return UndirectedGraph(m + n, std::move(edges));
}

OrientedGraph directed_path(int k)
{
    if (k < 1)
        throw InvalidArgument("directed path needs at least one vertex");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < k; ++i)
        arcs.push_back({i, i + 1});
    return OrientedGraph(k, std::move(arcs));
}

OrientedGraph directed_cycle(int k)
{
    if (k < 3)
        throw InvalidArgument("directed cycle needs at least three vertices");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        arcs.push_back({i, (i + 1) % k});
    return OrientedGraph(k, std::move(arcs));
}

OrientedGraph transitive_tournament(int n)
{
    if (n < 1)
        throw InvalidArgument("tournament needs at least one vertex");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            arcs.push_back({i, j});
    return OrientedGraph(n, std::move(arcs));
}

OrientedGraph circulant_tournament(int n, std::span<const int> residues)
{
    if (n < 1 || n % 2 == 0)
        throw InvalidArgument("circulant tournament order must be odd");
    std::vector<bool> in_set(static_cast<std::size_t>(n), false);
    for (int r : residues) {
        if (r < 1 || r >= n)
            throw InvalidArgument("residue " + std::to_string(r) + " outside 1.." +
                                  std::to_string(n - 1));
        in_set[r] = true;
    }
    for (int d = 1; d < n; ++d)
        if (in_set[d] == in_set[n - d])
            throw InvalidArgument("exactly one of " + std::to_string(d) + " and " +
                                  std::to_string(n - d) + " must be a residue");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && in_set[((j - i) % n + n) % n])
                arcs.push_back({i, j});
    return OrientedGraph(n, std::move(arcs));
}

UndirectedGraph square(const UndirectedGraph &g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        Bitset reach = g.neighbor_set(u);
        for (Vertex w : g.neighbors(u))
            reach |= g.neighbor_set(w);
        for (auto v = reach.find_next(static_cast<std::size_t>(u) + 1); v < reach.size();
             v = reach.find_next(v + 1))
            edges.push_back({u, static_cast<Vertex>(v)});
    }
    return UndirectedGraph(g.order(), std::move(edges));
}

UndirectedGraph underlying(const OrientedGraph &d)
{
    std::vector<Edge> edges;
    edges.reserve(d.size());
    for (const auto &a : d.arcs())
        edges.push_back({a.tail, a.head});
    return UndirectedGraph(d.order(), std::move(edges));
}

bool is_orientation_of(const OrientedGraph &d, const UndirectedGraph &g)
{
    return d.size() == g.size() && underlying(d) == g;
}

bool is_tournament(const OrientedGraph &d)
{
    const auto n = static_cast<std::size_t>(d.order());
    return d.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_oriented_clique(const OrientedGraph &d)
{
    for (Vertex u = 0; u < d.order(); ++u) {
        // u reaches by paths of length <= 2 in either direction
        Bitset reach = d.out_set(u);
        reach |= d.in_set(u);
        for (Vertex w : d.out_neighbors(u))
            reach |= d.out_set(w);
        for (Vertex w : d.in_neighbors(u))
            reach |= d.in_set(w);
        for (Vertex v = u + 1; v < d.order(); ++v)
            if (!reach.test(v))
                return false;
    }
    return true;
}

OrientedGraph line_digraph(const OrientedGraph &d)
{
    const auto arcs = d.arcs();
    std::vector<Arc> result;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = 0; j < arcs.size(); ++j)
            if (arcs[i].head == arcs[j].tail)
                result.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return OrientedGraph(static_cast<int>(arcs.size()), std::move(result));
}

OrientedGraph induced_subgraph(const OrientedGraph &d, std::span<const Vertex> vertices)
{
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_endpoint(d.order(), vertices[i]);
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (d.has_arc(vertices[i], vertices[j]))
                arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
    return OrientedGraph(static_cast<int>(vertices.size()), std::move(arcs));
}

UndirectedGraph induced_subgraph(const UndirectedGraph &g, std::span<const Vertex> vertices)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_endpoint(g.order(), vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
    return UndirectedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

UndirectedGraph remove_edges(const UndirectedGraph &g, std::span<const Edge> removed)
{
    std::vector<Edge> drop(removed.begin(), removed.end());
    for (auto &e : drop)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> kept;
    for (const auto &e : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), e))
            kept.push_back(e);
    return UndirectedGraph(g.order(), std::move(kept));
}

} // namespace orichrom
