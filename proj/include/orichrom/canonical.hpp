#pragma once

#include "orichrom/graph.hpp"

#include <vector>

namespace orichrom {

/// Isomorphism-invariant code of a small oriented graph: the lexicographically smallest
/// adjacency string over all relabellings compatible with an iterated degree refinement.
/// Exponential in the size of the refinement cells; intended for order <= 10.
std::vector<bool> canonical_code(const OrientedGraph &d);

/// A relabelling perm (perm[i] = original vertex placed at position i) achieving canonical_code.
std::vector<Vertex> canonical_labelling(const OrientedGraph &d);

bool isomorphic(const OrientedGraph &a, const OrientedGraph &b);

/// One representative per isomorphism class of tournaments on n vertices (n <= 8).
std::vector<OrientedGraph> tournament_classes(int n);

} // namespace orichrom
