#include "orichrom/canonical.hpp"

#include "orichrom/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace orichrom {

namespace {

/// Iterated refinement of (out-degree, in-degree) by neighbour colours. Returns a colour per
/// vertex; colours are ranks of invariant keys, so equal inputs give equal partitions.
std::vector<int> refine(const OrientedGraph &d)
{
    const int n = d.order();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    using Key = std::vector<int>;
    int classes = -1;
    for (int round = 0;; ++round) {
        std::vector<Key> keys(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            Key key{colour[v], static_cast<int>(d.out_neighbors(v).size()),
                    static_cast<int>(d.in_neighbors(v).size())};
            if (round > 0) {
                std::vector<int> outs, ins;
                for (Vertex w : d.out_neighbors(v))
                    outs.push_back(colour[w]);
                for (Vertex w : d.in_neighbors(v))
                    ins.push_back(colour[w]);
                std::sort(outs.begin(), outs.end());
                std::sort(ins.begin(), ins.end());
                key.insert(key.end(), outs.begin(), outs.end());
                key.push_back(-1);
                key.insert(key.end(), ins.begin(), ins.end());
            }
            keys[v] = std::move(key);
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
        const int now = static_cast<int>(sorted.size());
        if (now == classes || now == n)
            break;
        classes = now;
    }
    return colour;
}

struct Search {
    const OrientedGraph &d;
    std::vector<std::vector<Vertex>> cells;
    std::vector<Vertex> perm;
    std::vector<bool> best;
    std::vector<Vertex> best_perm;

    std::vector<bool> code() const
    {
        const auto n = perm.size();
        std::vector<bool> c(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] = d.has_arc(perm[i], perm[j]);
        return c;
    }

    void run(std::size_t cell)
    {
        if (cell == cells.size()) {
            auto c = code();
            if (best_perm.empty() || c < best) {
                best = std::move(c);
                best_perm = perm;
            }
            return;
        }
        auto members = cells[cell];
        std::sort(members.begin(), members.end());
        do {
            const auto mark = perm.size();
            perm.insert(perm.end(), members.begin(), members.end());
            run(cell + 1);
            perm.resize(mark);
        } while (std::next_permutation(members.begin(), members.end()));
    }
};

Search canonical_search(const OrientedGraph &d)
{
    if (d.order() > 12)
        throw CapExceeded("canonical form limited to order 12");
    const auto colour = refine(d);
    const int classes = d.order() == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    Search search{d, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(classes)), {}, {}, {}};
    for (Vertex v = 0; v < d.order(); ++v)
        search.cells[colour[v]].push_back(v);
    search.run(0);
    return search;
}

} // namespace

std::vector<bool> canonical_code(const OrientedGraph &d)
{
    auto code = canonical_search(d).best;
    // prefix with the order so graphs of different orders never collide
    std::vector<bool> result;
    for (int bit = 15; bit >= 0; --bit)
        result.push_back((d.order() >> bit) & 1);
    result.insert(result.end(), code.begin(), code.end());
    return result;
}

std::vector<Vertex> canonical_labelling(const OrientedGraph &d)
{
    return canonical_search(d).best_perm;
}

bool isomorphic(const OrientedGraph &a, const OrientedGraph &b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_code(a) == canonical_code(b);
}

std::vector<OrientedGraph> tournament_classes(int n)
{
    if (n < 1)
        throw InvalidArgument("tournament order must be positive");
    if (n > 8)
        throw CapExceeded("tournament class enumeration limited to order 8");

    static std::mutex mutex;
    static std::map<int, std::vector<OrientedGraph>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end())
        return it->second;

    std::vector<OrientedGraph> classes{OrientedGraph(1)};
    for (int order = 2; order <= n; ++order) {
        if (auto it = cache.find(order); it != cache.end()) {
            classes = it->second;
            continue;
        }
        std::map<std::vector<bool>, OrientedGraph> found;
        for (const auto &base : classes) {
            const int last = order - 1;
            for (std::uint32_t mask = 0; mask < (1U << last); ++mask) {
                std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
                for (Vertex j = 0; j < last; ++j)
                    arcs.push_back((mask >> j) & 1U ? Arc{last, j} : Arc{j, last});
                OrientedGraph t(order, std::move(arcs));
                auto code = canonical_code(t);
                if (found.contains(code))
                    continue;
                auto perm = canonical_labelling(t);
                found.emplace(std::move(code), induced_subgraph(t, perm));
            }
        }
        classes.clear();
        for (auto &[code, t] : found)
            classes.push_back(std::move(t));
        cache.emplace(order, classes);
    }
    cache.emplace(n, classes);
    return classes;
}

} // namespace orichrom
