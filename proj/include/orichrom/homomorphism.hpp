#pragma once

#include "orichrom/graph.hpp"

#include <optional>
#include <vector>

namespace orichrom {

/// Total map from source vertices to target vertices (or colour ids).
using VertexMap = std::vector<Vertex>;

/// Every arc (u,v) of `source` has (m[u], m[v]) in `target`. False if m is not total or
/// has out-of-range images.
bool verify_homomorphism(const OrientedGraph &source, const OrientedGraph &target,
                         const VertexMap &m);
bool verify_homomorphism(const UndirectedGraph &source, const UndirectedGraph &target,
                         const VertexMap &m);

/// Exact backtracking search with forward checking. Variables are picked most-constrained
/// first (ties: smallest index); values in ascending target order.
std::optional<VertexMap> find_homomorphism(const OrientedGraph &source,
                                           const OrientedGraph &target);

/// Adjacent vertices get distinct colours and all arcs between two colour classes point the
/// same way.
bool verify_oriented_coloring(const OrientedGraph &d, const VertexMap &colors);

/// Oriented colouring with at most k colours (ids 0..k-1), or nullopt if none exists.
std::optional<VertexMap> find_oriented_coloring(const OrientedGraph &d, int k);

/// Adjacent vertices get distinct colours.
bool verify_proper_coloring(const UndirectedGraph &g, const VertexMap &colors);

/// Proper colouring with at most k colours, or nullopt.
std::optional<VertexMap> find_proper_coloring(const UndirectedGraph &g, int k);

/// outer ∘ inner.
VertexMap compose(const VertexMap &outer, const VertexMap &inner);

/// Oriented graph on colour classes 0..max(colors) with the arcs induced by `colors`.
/// Throws InvalidArgument when the colouring is not an oriented colouring.
OrientedGraph quotient_target(const OrientedGraph &d, const VertexMap &colors);

} // namespace orichrom
