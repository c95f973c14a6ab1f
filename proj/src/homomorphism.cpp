#include "orichrom/homomorphism.hpp"

#include "orichrom/error.hpp"

#include <algorithm>

namespace orichrom {

bool verify_homomorphism(const OrientedGraph &source, const OrientedGraph &target,
                         const VertexMap &m)
{
    if (m.size() != static_cast<std::size_t>(source.order()))
        return false;
    for (Vertex image : m)
        if (image < 0 || image >= target.order())
            return false;
    return std::all_of(source.arcs().begin(), source.arcs().end(),
                       [&](const Arc &a) { return target.has_arc(m[a.tail], m[a.head]); });
}

bool verify_homomorphism(const UndirectedGraph &source, const UndirectedGraph &target,
                         const VertexMap &m)
{
    if (m.size() != static_cast<std::size_t>(source.order()))
        return false;
    for (Vertex image : m)
        if (image < 0 || image >= target.order())
            return false;
    return std::all_of(source.edges().begin(), source.edges().end(),
                       [&](const Edge &e) { return target.adjacent(m[e.u], m[e.v]); });
}

namespace {

class HomSearch {
  public:
    HomSearch(const OrientedGraph &source, const OrientedGraph &target)
        : source_(source), target_(target), assigned_(static_cast<std::size_t>(source.order()), -1)
    {
    }

    std::optional<VertexMap> run()
    {
        const auto tn = static_cast<std::size_t>(target_.order());
        Bitset has_out(tn), has_in(tn);
        for (Vertex t = 0; t < target_.order(); ++t) {
            if (!target_.out_neighbors(t).empty())
                has_out.set(t);
            if (!target_.in_neighbors(t).empty())
                has_in.set(t);
        }
        std::vector<Bitset> domains(static_cast<std::size_t>(source_.order()), Bitset(tn, true));
        for (Vertex v = 0; v < source_.order(); ++v) {
            if (!source_.out_neighbors(v).empty())
                domains[v] &= has_out;
            if (!source_.in_neighbors(v).empty())
                domains[v] &= has_in;
            if (domains[v].none())
                return std::nullopt;
        }
        if (!search(domains, 0))
            return std::nullopt;
        return assigned_;
    }

  private:
    bool search(const std::vector<Bitset> &domains, int depth)
    {
        if (depth == source_.order())
            return true;
        Vertex pick = -1;
        std::size_t best = 0;
        for (Vertex v = 0; v < source_.order(); ++v) {
            if (assigned_[v] >= 0)
                continue;
            const auto c = domains[v].count();
            if (pick < 0 || c < best) {
                pick = v;
                best = c;
            }
        }
        const auto &dom = domains[pick];
        for (auto t = dom.find_first(); t < dom.size(); t = dom.find_next(t + 1)) {
            const auto image = static_cast<Vertex>(t);
            auto next = domains;
            bool wiped = false;
            for (Vertex w : source_.out_neighbors(pick)) {
                if (w == pick)
                    continue;
                if (assigned_[w] >= 0) {
                    if (!target_.has_arc(image, assigned_[w])) {
                        wiped = true;
                        break;
                    }
                    continue;
                }
                next[w] &= target_.out_set(image);
                if (next[w].none()) {
                    wiped = true;
                    break;
                }
            }
            if (!wiped)
                for (Vertex w : source_.in_neighbors(pick)) {
                    if (assigned_[w] >= 0) {
                        if (!target_.has_arc(assigned_[w], image)) {
                            wiped = true;
                            break;
                        }
                        continue;
                    }
                    next[w] &= target_.in_set(image);
                    if (next[w].none()) {
                        wiped = true;
                        break;
                    }
                }
            if (wiped)
                continue;
            assigned_[pick] = image;
            if (search(next, depth + 1))
                return true;
            assigned_[pick] = -1;
        }
        return false;
    }

    const OrientedGraph &source_;
    const OrientedGraph &target_;
    VertexMap assigned_;
};

/// Static order: repeatedly take the vertex with most already-placed neighbours, then highest
/// degree, then smallest index. Keeps constraints tight early.
template <class NeighborsOf>
std::vector<Vertex> connected_order(int n, NeighborsOf &&neighbors_of)
{
    std::vector<Vertex> order;
    std::vector<int> placed_neighbours(static_cast<std::size_t>(n), 0);
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (pick < 0 || placed_neighbours[v] > placed_neighbours[pick] ||
                (placed_neighbours[v] == placed_neighbours[pick] &&
                 neighbors_of(v).size() > neighbors_of(pick).size()))
                pick = v;
        }
        placed[pick] = true;
        order.push_back(pick);
        for (Vertex w : neighbors_of(pick))
            ++placed_neighbours[w];
    }
    return order;
}

class OrientedColoringSearch {
  public:
    OrientedColoringSearch(const OrientedGraph &d, int k)
        : d_(d), k_(k), colors_(static_cast<std::size_t>(d.order()), -1),
          forward_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0),
          out_class_(static_cast<std::size_t>(k), false)
    {
        const auto u = underlying(d);
        order_ = connected_order(d.order(), [&](Vertex v) { return u.neighbors(v); });
    }

    std::optional<VertexMap> run()
    {
        if (search(0, 0))
            return colors_;
        return std::nullopt;
    }

  private:
    int &forward(int from, int to) { return forward_[static_cast<std::size_t>(from * k_ + to)]; }

    // Checks and records every arc between v and already coloured vertices. Returns false (and
    // leaves the counts untouched) on a conflict.
    bool place(Vertex v, int c)
    {
        for (Vertex w : d_.out_neighbors(v)) {
            const int cw = colors_[w];
            if (cw < 0)
                continue;
            if (cw == c || forward(cw, c) > 0)
                return false;
        }
        for (Vertex w : d_.in_neighbors(v)) {
            const int cw = colors_[w];
            if (cw < 0)
                continue;
            if (cw == c || forward(c, cw) > 0)
                return false;
        }
        // v must not see one class both as out- and as in-neighbour
        std::fill(out_class_.begin(), out_class_.end(), false);
        for (Vertex w : d_.out_neighbors(v))
            if (colors_[w] >= 0)
                out_class_[colors_[w]] = true;
        for (Vertex w : d_.in_neighbors(v))
            if (colors_[w] >= 0 && out_class_[colors_[w]])
                return false;
        for (Vertex w : d_.out_neighbors(v))
            if (colors_[w] >= 0)
                ++forward(c, colors_[w]);
        for (Vertex w : d_.in_neighbors(v))
            if (colors_[w] >= 0)
                ++forward(colors_[w], c);
        colors_[v] = c;
        return true;
    }

    void unplace(Vertex v)
    {
        const int c = colors_[v];
        colors_[v] = -1;
        for (Vertex w : d_.out_neighbors(v))
            if (colors_[w] >= 0)
                --forward(c, colors_[w]);
        for (Vertex w : d_.in_neighbors(v))
            if (colors_[w] >= 0)
                --forward(colors_[w], c);
    }

    bool search(std::size_t pos, int used)
    {
        if (pos == order_.size())
            return true;
        const Vertex v = order_[pos];
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (!place(v, c))
                continue;
            if (search(pos + 1, std::max(used, c + 1)))
                return true;
            unplace(v);
        }
        return false;
    }

    const OrientedGraph &d_;
    int k_;
    VertexMap colors_;
    std::vector<int> forward_; // forward_[a*k+b] = number of arcs from class a to class b
    std::vector<bool> out_class_;
    std::vector<Vertex> order_;
};

class ProperColoringSearch {
  public:
    ProperColoringSearch(const UndirectedGraph &g, int k)
        : g_(g), k_(k), colors_(static_cast<std::size_t>(g.order()), -1)
    {
        order_ = connected_order(g.order(), [&](Vertex v) { return g.neighbors(v); });
    }

    std::optional<VertexMap> run()
    {
        if (search(0, 0))
            return colors_;
        return std::nullopt;
    }

  private:
    bool search(std::size_t pos, int used)
    {
        if (pos == order_.size())
            return true;
        const Vertex v = order_[pos];
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (Vertex w : g_.neighbors(v))
                if (colors_[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            colors_[v] = c;
            if (search(pos + 1, std::max(used, c + 1)))
                return true;
            colors_[v] = -1;
        }
        return false;
    }

    const UndirectedGraph &g_;
    int k_;
    VertexMap colors_;
    std::vector<Vertex> order_;
};

} // namespace

std::optional<VertexMap> find_homomorphism(const OrientedGraph &source,
                                           const OrientedGraph &target)
{
    if (source.order() == 0)
        return VertexMap{};
    if (target.order() == 0)
        return std::nullopt;
    return HomSearch(source, target).run();
}

bool verify_oriented_coloring(const OrientedGraph &d, const VertexMap &colors)
{
    if (colors.size() != static_cast<std::size_t>(d.order()))
        return false;
    for (Vertex c : colors)
        if (c < 0)
            return false;
    // (a) proper; (b) no pair of classes joined in both directions
    std::vector<std::pair<Vertex, Vertex>> class_arcs;
    for (const auto &a : d.arcs()) {
        if (colors[a.tail] == colors[a.head])
            return false;
        class_arcs.emplace_back(colors[a.tail], colors[a.head]);
    }
    std::sort(class_arcs.begin(), class_arcs.end());
    for (const auto &[from, to] : class_arcs)
        if (std::binary_search(class_arcs.begin(), class_arcs.end(), std::pair{to, from}))
            return false;
    return true;
}

std::optional<VertexMap> find_oriented_coloring(const OrientedGraph &d, int k)
{
    if (k < 0)
        throw InvalidArgument("colour count must be non-negative");
    if (d.order() == 0)
        return VertexMap{};
    if (k == 0)
        return std::nullopt;
    return OrientedColoringSearch(d, k).run();
}

bool verify_proper_coloring(const UndirectedGraph &g, const VertexMap &colors)
{
    if (colors.size() != static_cast<std::size_t>(g.order()))
        return false;
    for (Vertex c : colors)
        if (c < 0)
            return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge &e) { return colors[e.u] != colors[e.v]; });
}

std::optional<VertexMap> find_proper_coloring(const UndirectedGraph &g, int k)
{
    if (k < 0)
        throw InvalidArgument("colour count must be non-negative");
    if (g.order() == 0)
        return VertexMap{};
    if (k == 0)
        return std::nullopt;
    return ProperColoringSearch(g, k).run();
}

VertexMap compose(const VertexMap &outer, const VertexMap &inner)
{
    VertexMap result;
    result.reserve(inner.size());
    for (Vertex v : inner) {
        if (v < 0 || static_cast<std::size_t>(v) >= outer.size())
            throw InvalidArgument("maps are not composable");
        result.push_back(outer[v]);
    }
    return result;
}

OrientedGraph quotient_target(const OrientedGraph &d, const VertexMap &colors)
{
    if (!verify_oriented_coloring(d, colors))
        throw InvalidArgument("not an oriented colouring");
    const int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<Arc> arcs;
    for (const auto &a : d.arcs())
        arcs.push_back({colors[a.tail], colors[a.head]});
    return OrientedGraph(k, std::move(arcs));
}

} // namespace orichrom
