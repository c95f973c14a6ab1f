// Slow, obviously-correct reference implementations used to check the library.
#pragma once

#include "orichrom/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using orichrom::Arc;
using orichrom::Edge;
using orichrom::OrientedGraph;
using orichrom::UndirectedGraph;
using orichrom::Vertex;

inline bool arc_in(const std::vector<Arc> &arcs, Vertex u, Vertex v)
{
    return std::find(arcs.begin(), arcs.end(), Arc{u, v}) != arcs.end();
}

/// Calls fn(map) for every map {0..n-1} -> {0..k-1}; stops early when fn returns true.
inline bool any_map(int n, int k, const std::function<bool(const std::vector<int> &)> &fn)
{
    if (n == 0)
        return fn({});
    if (k == 0)
        return false;
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    while (true) {
        if (fn(m))
            return true;
        int i = 0;
        while (i < n && ++m[i] == k)
            m[i++] = 0;
        if (i == n)
            return false;
    }
}

inline bool is_hom(const OrientedGraph &d, const OrientedGraph &t, const std::vector<int> &m)
{
    for (const auto &a : d.arcs()) {
        bool found = false;
        for (const auto &b : t.arcs())
            if (b.tail == m[a.tail] && b.head == m[a.head])
                found = true;
        if (!found)
            return false;
    }
    return true;
}

inline bool hom_exists(const OrientedGraph &d, const OrientedGraph &t)
{
    return any_map(d.order(), t.order(), [&](const auto &m) { return is_hom(d, t, m); });
}

/// Oriented colouring straight from the two-arc definition.
inline bool is_oriented_coloring(const OrientedGraph &d, const std::vector<int> &c)
{
    for (const auto &a : d.arcs()) {
        if (c[a.tail] == c[a.head])
            return false;
        for (const auto &b : d.arcs())
            if (c[a.head] == c[b.tail] && c[a.tail] == c[b.head])
                return false;
    }
    return true;
}

inline int chi_o(const OrientedGraph &d)
{
    for (int k = 0;; ++k)
        if (any_map(d.order(), k, [&](const auto &c) { return is_oriented_coloring(d, c); }))
            return k;
}

inline int chi(const UndirectedGraph &g)
{
    for (int k = 0;; ++k)
        if (any_map(g.order(), k, [&](const auto &c) {
                for (const auto &e : g.edges())
                    if (c[e.u] == c[e.v])
                        return false;
                return true;
            }))
            return k;
}

/// All orientations, built from scratch by flipping edges per bit.
inline std::vector<OrientedGraph> all_orientations(const UndirectedGraph &g)
{
    std::vector<OrientedGraph> out;
    const auto edges = g.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < edges.size(); ++i)
            arcs.push_back((mask >> i) & 1 ? Arc{edges[i].v, edges[i].u} : Arc{edges[i].u, edges[i].v});
        out.emplace_back(g.order(), arcs);
    }
    return out;
}

inline int chi_o_undirected(const UndirectedGraph &g)
{
    int best = 0;
    for (const auto &d : all_orientations(g))
        best = std::max(best, chi_o(d));
    return best;
}

/// Smallest adjacency string over all vertex permutations.
inline std::vector<bool> brute_canonical(const OrientedGraph &d)
{
    const int n = d.order();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                code.push_back(d.has_arc(p[i], p[j]));
        if (best.empty() || code < best)
            best = code;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline std::vector<OrientedGraph> all_tournaments(int n)
{
    std::vector<OrientedGraph> out;
    for (const auto &d : all_orientations(orichrom::complete(n)))
        out.push_back(d);
    return out;
}

/// Number of isomorphism classes of tournaments of order n (n <= 6).
inline std::size_t tournament_class_count(int n)
{
    std::set<std::vector<bool>> codes;
    for (const auto &t : all_tournaments(n))
        codes.insert(brute_canonical(t));
    return codes.size();
}

/// Whether host contains every order-n tournament as an induced subtournament.
inline bool is_universal(const OrientedGraph &host, int n)
{
    std::set<std::vector<bool>> need;
    for (const auto &t : all_tournaments(n))
        need.insert(brute_canonical(t));
    std::set<std::vector<bool>> seen;
    const int size = host.order();
    for (std::uint32_t mask = 0; mask < (1U << size); ++mask) {
        if (std::popcount(mask) != n)
            continue;
        std::vector<Vertex> keep;
        for (int v = 0; v < size; ++v)
            if ((mask >> v) & 1)
                keep.push_back(v);
        seen.insert(brute_canonical(orichrom::induced_subgraph(host, keep)));
    }
    return seen == need;
}

/// Least order of a universal tournament, searching every labelled tournament.
inline int epsilon(int n)
{
    for (int size = n;; ++size)
        for (const auto &t : all_tournaments(size))
            if (is_universal(t, n))
                return size;
}

inline UndirectedGraph random_graph(int n, double p, std::mt19937_64 &rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return UndirectedGraph(n, edges);
}

inline OrientedGraph random_oriented(int n, double p, std::mt19937_64 &rng)
{
    std::bernoulli_distribution coin(p), flip(0.5);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                arcs.push_back(flip(rng) ? Arc{u, v} : Arc{v, u});
    return OrientedGraph(n, arcs);
}

/// Graph distance by Floyd-Warshall.
inline std::vector<std::vector<int>> distances(const UndirectedGraph &g)
{
    const int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v)
        d[v][v] = 0;
    for (const auto &e : g.edges())
        d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

} // namespace oracle
