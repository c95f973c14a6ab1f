#pragma once

#include "orichrom/bitset.hpp"
#include "orichrom/limits.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace orichrom {

/// Vertices are dense integers 0..n-1.
using Vertex = int;

/// Unordered edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge &) const = default;
};

/// Ordered pair (tail, head).
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    auto operator<=>(const Arc &) const = default;
};

/// Simple undirected graph. Immutable after construction.
class UndirectedGraph {
  public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int order);
    /// Edges are normalised to (min,max) and deduplicated; loops and out-of-range endpoints throw.
    UndirectedGraph(int order, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const { return matrix_[u].test(v); }
    const Bitset &neighbor_set(Vertex v) const { return matrix_[v]; }

    /// Edge sets of `other` (same order) are a subset of ours.
    bool contains(const UndirectedGraph &other) const;

    bool operator==(const UndirectedGraph &other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Bitset> matrix_;
};

/// Loop-free antisymmetric digraph. Immutable after construction.
class OrientedGraph {
  public:
    OrientedGraph() = default;
    explicit OrientedGraph(int order);
    /// Duplicate arcs are merged; loops, out-of-range endpoints and opposite pairs throw.
    OrientedGraph(int order, std::vector<Arc> arcs);

    int order() const { return n_; }
    std::size_t size() const { return arcs_.size(); }
    std::span<const Arc> arcs() const { return arcs_; }
    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
    bool has_arc(Vertex u, Vertex v) const { return out_matrix_[u].test(v); }
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }
    const Bitset &out_set(Vertex v) const { return out_matrix_[v]; }
    const Bitset &in_set(Vertex v) const { return in_matrix_[v]; }

    bool contains(const OrientedGraph &other) const;

    bool operator==(const OrientedGraph &other) const
    {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_, in_;
    std::vector<Bitset> out_matrix_, in_matrix_;
};

/// Ordering of the edges of a graph; fixes the meaning of orientation indices.
class EdgeOrder {
  public:
    /// Default (min,max)-lexicographic order.
    static EdgeOrder lexicographic(const UndirectedGraph &g);
    /// Custom order; must be a permutation of g's edge set.
    static EdgeOrder custom(const UndirectedGraph &g, std::vector<Edge> order);

    std::span<const Edge> edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }

  private:
    std::vector<Edge> edges_;
};

/// All 2^|E| orientations of a graph as a random-access range. Orientation `index` gives edge i
/// (in EdgeOrder) the arc (min,max) when bit i is 0 and (max,min) when it is 1.
class Orientations {
  public:
    Orientations(const UndirectedGraph &g, int max_edges = Limits{}.max_edges);
    Orientations(const UndirectedGraph &g, EdgeOrder order, int max_edges = Limits{}.max_edges);

    std::uint64_t size() const { return std::uint64_t{1} << order_.size(); }
    OrientedGraph operator[](std::uint64_t index) const;
    /// Inverse of operator[] for an orientation of the same graph.
    std::uint64_t index_of(const OrientedGraph &d) const;

    class iterator {
      public:
        using value_type = OrientedGraph;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const Orientations *range, std::uint64_t i) : range_(range), i_(i) {}
        OrientedGraph operator*() const { return (*range_)[i_]; }
        iterator &operator++()
        {
            ++i_;
            return *this;
        }
        iterator operator++(int)
        {
            auto copy = *this;
            ++i_;
            return copy;
        }
        bool operator==(const iterator &other) const { return i_ == other.i_; }

      private:
        const Orientations *range_ = nullptr;
        std::uint64_t i_ = 0;
    };
    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

  private:
    int n_;
    EdgeOrder order_;
};

// Standard families.
UndirectedGraph path(int k);
UndirectedGraph cycle(int k);
UndirectedGraph complete(int n);
/// x-vertices 0..m-1, y-vertices m..m+n-1.
UndirectedGraph complete_bipartite(int m, int n);

OrientedGraph directed_path(int k);
OrientedGraph directed_cycle(int k);
OrientedGraph transitive_tournament(int n);
/// Arc (i,j) iff (j-i) mod n is in `residues`; exactly one of d, n-d must be present.
OrientedGraph circulant_tournament(int n, std::span<const int> residues);

/// Join every pair at distance 1 or 2.
UndirectedGraph square(const UndirectedGraph &g);
UndirectedGraph underlying(const OrientedGraph &d);
bool is_orientation_of(const OrientedGraph &d, const UndirectedGraph &g);
bool is_tournament(const OrientedGraph &d);

/// Every pair joined by a directed path of length 1 or 2.
bool is_oriented_clique(const OrientedGraph &d);

/// Vertices are the arcs of d in d.arcs() order; ((u,v),(v,w)) is an arc.
OrientedGraph line_digraph(const OrientedGraph &d);

/// Induced subgraph; vertex i of the result is vertices[i].
OrientedGraph induced_subgraph(const OrientedGraph &d, std::span<const Vertex> vertices);
UndirectedGraph induced_subgraph(const UndirectedGraph &g, std::span<const Vertex> vertices);

/// Subgraph with the given edges removed (same vertex set).
UndirectedGraph remove_edges(const UndirectedGraph &g, std::span<const Edge> removed);

} // namespace orichrom
