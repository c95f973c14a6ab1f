#include "orichrom/constructions.hpp"

#include "orichrom/error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace orichrom {

std::string VertexLabel::to_string() const
{
    std::ostringstream out;
    if (tag == "b") {
        out << "b{";
        for (std::size_t i = 0; i < coords.size(); ++i)
            out << (i ? "," : "") << coords[i];
        out << '}';
    } else if (!tag.empty()) {
        out << tag;
        for (int c : coords)
            out << c;
    } else {
        out << '[';
        for (std::size_t i = 0; i < coords.size(); ++i)
            out << (i ? "," : "") << coords[i];
        out << ']';
    }
    return out.str();
}

namespace {

int color_count(const VertexMap &colors)
{
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

void require_orientation(const OrientedGraph &d, const UndirectedGraph &g, const char *what)
{
    if (!is_orientation_of(d, g))
        throw InvalidArgument(std::string("input is not an orientation of the ") + what);
}

void require_proper(const UndirectedGraph &g, const VertexMap &colors, const char *what)
{
    if (!verify_proper_coloring(g, colors))
        throw InvalidArgument(std::string(what) + " is not a proper colouring");
}

void check_construction_order(std::int64_t order, const Limits &limits)
{
    if (order > limits.max_construction_order)
        throw CapExceeded("construction order " + std::to_string(order) + " exceeds the cap " +
                          std::to_string(limits.max_construction_order));
}

/// Per-layer homomorphisms into `target`: verifies supplied maps, searches for missing ones.
std::vector<VertexMap> layer_homs(const OrientedGraph &orientation, const ProductShape &shape,
                                  Side copy_of, const OrientedGraph &target,
                                  const std::vector<VertexMap> &supplied, const char *what)
{
    const int count = copy_of == Side::left ? shape.right_order : shape.left_order;
    if (!supplied.empty() && supplied.size() != static_cast<std::size_t>(count))
        throw InvalidArgument(std::string(what) + ": wrong number of layer homomorphisms");
    std::vector<VertexMap> result;
    for (Vertex fixed = 0; fixed < count; ++fixed) {
        const auto layer = layer_of(orientation, shape, copy_of, fixed);
        if (!supplied.empty()) {
            if (!verify_homomorphism(layer.graph, target, supplied[fixed]))
                throw InvalidArgument(std::string(what) + ": layer map " +
                                      std::to_string(fixed) + " is not a homomorphism");
            result.push_back(supplied[fixed]);
            continue;
        }
        auto found = find_homomorphism(layer.graph, target);
        if (!found)
            throw InvalidArgument(std::string(what) + ": layer " + std::to_string(fixed) +
                                  " has no homomorphism into the supplied target");
        result.push_back(std::move(*found));
    }
    return result;
}

/// Builds the arc set of a target from a per-pair rule.
template <class Rule> OrientedGraph build_target(int order, Rule &&rule)
{
    std::vector<Arc> arcs;
    for (Vertex x = 0; x < order; ++x)
        for (Vertex y = 0; y < order; ++y)
            if (x != y && rule(x, y))
                arcs.push_back({x, y});
    return OrientedGraph(order, std::move(arcs));
}

std::int64_t checked_pow(std::int64_t base, int exponent)
{
    std::int64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (result > (std::int64_t{1} << 50) / std::max<std::int64_t>(base, 1))
            throw CapExceeded("construction order overflows");
        result *= base;
    }
    return result;
}

} // namespace

// ---------------------------------------------------------------------------------------------

StructuredTarget bipartite_target(int m)
{
    if (m < 1)
        throw InvalidArgument("bipartite target needs m >= 1");
    if (m > 16)
        throw CapExceeded("bipartite target limited to m <= 16");
    const int subsets = 1 << m;
    StructuredTarget target;
    for (int i = 0; i < m; ++i)
        target.labels.push_back({"a", {i + 1}});
    for (int s = 0; s < subsets; ++s) {
        VertexLabel label{"b", {}};
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1)
                label.coords.push_back(i + 1);
        target.labels.push_back(std::move(label));
    }
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i)
        for (int s = 0; s < subsets; ++s) {
            if ((s >> i) & 1)
                arcs.push_back({i, m + s});
            else
                arcs.push_back({m + s, i});
        }
    target.graph = OrientedGraph(m + subsets, std::move(arcs));
    return target;
}

VertexMap bipartite_hom(const OrientedGraph &d, int m, int n)
{
    require_orientation(d, complete_bipartite(m, n), "complete bipartite graph");
    if (m > 16)
        throw CapExceeded("bipartite target limited to m <= 16");
    VertexMap map(static_cast<std::size_t>(m + n));
    for (int i = 0; i < m; ++i)
        map[i] = i;
    for (int j = 0; j < n; ++j) {
        int in_set = 0;
        for (int i = 0; i < m; ++i)
            if (d.has_arc(i, m + j))
                in_set |= 1 << i;
        map[m + j] = m + in_set;
    }
    return map;
}

OrientedGraph bipartite_tight_orientation(int m, int n)
{
    if (m < 1 || n < 1)
        throw InvalidArgument("bipartite orientation needs m, n >= 1");
    if (m > 30)
        throw CapExceeded("bipartite orientation limited to m <= 30");
    const std::int64_t subsets = std::int64_t{1} << m;
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (j < subsets && ((j >> i) & 1))
                arcs.push_back({i, m + j});
            else
                arcs.push_back({m + j, i});
        }
    return OrientedGraph(m + n, std::move(arcs));
}

// ---------------------------------------------------------------------------------------------

std::int64_t square_palette_size(int k)
{
    if (k < 0 || k > 62)
        throw InvalidArgument("palette size needs 0 <= k <= 62");
    return (std::int64_t{1} << k) - 1;
}

VertexLabel square_palette_label(int index)
{
    if (index < 0)
        throw InvalidArgument("negative palette index");
    // block a (0-based) covers [2^a - 1, 2^(a+1) - 1)
    const int a = std::bit_width(static_cast<unsigned>(index) + 1U) - 1;
    const int bits = index - ((1 << a) - 1);
    VertexLabel label{"", {a + 1}};
    for (int i = 0; i < a; ++i)
        label.coords.push_back((bits >> i) & 1);
    return label;
}

VertexMap square_coloring(const UndirectedGraph &g, const VertexMap &sigma,
                          const OrientedGraph &d)
{
    require_orientation(d, g, "graph");
    require_proper(square(g), sigma, "sigma on the square");
    if (color_count(sigma) > 30)
        throw CapExceeded("square colouring limited to 30 colours");
    VertexMap colors(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        const int a = sigma[u];
        int bits = 0;
        int seen = 0;
        for (Vertex v : d.in_neighbors(u)) {
            if (sigma[v] >= a)
                continue;
            if ((seen >> sigma[v]) & 1)
                throw PremiseViolation("two in-neighbours of " + std::to_string(u) +
                                       " share a colour");
            seen |= 1 << sigma[v];
            bits |= 1 << sigma[v];
        }
        colors[u] = ((1 << a) - 1) + bits;
    }
    return colors;
}

// ---------------------------------------------------------------------------------------------

VertexMap product_hom_compose(ProductKind kind, const OrientedGraph &d, const OrientedGraph &e,
                              const OrientedGraph &t, const OrientedGraph &u,
                              const VertexMap &alpha, const VertexMap &beta)
{
    if (kind == ProductKind::direct)
        throw InvalidArgument("direct products use projection_hom");
    if (!verify_homomorphism(d, t, alpha) || !verify_homomorphism(e, u, beta))
        throw InvalidArgument("factor maps are not homomorphisms");
    const ProductShape source{d.order(), e.order()};
    const ProductShape target{t.order(), u.order()};
    VertexMap map(static_cast<std::size_t>(source.order()));
    for (Vertex x = 0; x < source.order(); ++x) {
        const auto p = source.split(x);
        map[x] = target.index(alpha[p.left], beta[p.right]);
    }
    return map;
}

VertexMap projection_hom(Side onto, const OrientedGraph &d, const OrientedGraph &e)
{
    const ProductShape shape{d.order(), e.order()};
    VertexMap map(static_cast<std::size_t>(shape.order()));
    for (Vertex x = 0; x < shape.order(); ++x) {
        const auto p = shape.split(x);
        map[x] = onto == Side::left ? p.left : p.right;
    }
    return map;
}

VertexMap t7_strong_grid_hom(int k, int l)
{
    if (k < 1 || l < 1)
        throw InvalidArgument("grid dimensions must be positive");
    const ProductShape shape{k, l};
    VertexMap map(static_cast<std::size_t>(shape.order()));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j)
            map[shape.index(i - 1, j - 1)] = (2 * j + i) % 7;
    return map;
}

VertexMap c3_cartesian_path_hom(const OrientedGraph &p, const OrientedGraph &q)
{
    if (p.order() < 1 || q.order() < 1)
        throw InvalidArgument("paths need at least one vertex");
    require_orientation(p, path(p.order()), "path");
    require_orientation(q, path(q.order()), "path");
    const ProductShape shape{p.order(), q.order()};
    VertexMap map(static_cast<std::size_t>(shape.order()));
    auto step = [](int from, bool forward) { return (from + (forward ? 1 : 2)) % 3; };
    map[shape.index(0, 0)] = 0;
    for (int j = 1; j < q.order(); ++j)
        map[shape.index(0, j)] = step(map[shape.index(0, j - 1)], q.has_arc(j - 1, j));
    for (int i = 1; i < p.order(); ++i)
        for (int j = 0; j < q.order(); ++j)
            map[shape.index(i, j)] = step(map[shape.index(i - 1, j)], p.has_arc(i - 1, i));
    return map;
}

// ---------------------------------------------------------------------------------------------
// Lexicographic products.

std::int64_t lexico_upper_order(int k, int l, int n)
{
    if (k < 1 || l < 1 || n < 1 || n > 16)
        throw InvalidArgument("lexicographic target needs k, l >= 1 and 1 <= n <= 16");
    return k * std::int64_t{l} * checked_pow(n + (std::int64_t{1} << n), k - 1);
}

namespace {

struct LexicoCoding {
    int k, l, radix;
    std::int64_t block; // radix^(k-1)

    std::int64_t encode(int a, int b, const std::vector<int> &c) const
    {
        std::int64_t index = (std::int64_t{a} * l + b) * block;
        std::int64_t place = block;
        for (int i = 0; i < k; ++i) {
            if (i == a)
                continue;
            place /= radix;
            index += c[i] * place;
        }
        return index;
    }

    void decode(std::int64_t index, int &a, int &b, std::vector<int> &c) const
    {
        const auto head = index / block;
        auto rest = index % block;
        a = static_cast<int>(head / l);
        b = static_cast<int>(head % l);
        c.assign(static_cast<std::size_t>(k), 0);
        std::int64_t place = block;
        for (int i = 0; i < k; ++i) {
            if (i == a)
                continue;
            place /= radix;
            c[i] = static_cast<int>(rest / place);
            rest %= place;
        }
    }
};

} // namespace

StructuredTarget lexico_upper_target(int k, const OrientedGraph &u_target, int n,
                                     const Limits &limits)
{
    const int l = u_target.order();
    const auto order = lexico_upper_order(k, l, n);
    check_construction_order(order, limits);
    const auto t = bipartite_target(n).graph;
    const LexicoCoding coding{k, l, t.order(), checked_pow(t.order(), k - 1)};

    struct Decoded {
        int a, b;
        std::vector<int> c;
    };
    std::vector<Decoded> vertices(static_cast<std::size_t>(order));
    StructuredTarget target;
    for (std::int64_t x = 0; x < order; ++x) {
        auto &v = vertices[x];
        coding.decode(x, v.a, v.b, v.c);
        VertexLabel label{"", {v.a + 1, v.b + 1}};
        for (int i = 0; i < k; ++i)
            label.coords.push_back(i == v.a ? 0 : v.c[i] + 1);
        target.labels.push_back(std::move(label));
    }
    target.graph = build_target(static_cast<int>(order), [&](Vertex x, Vertex y) {
        const auto &p = vertices[x];
        const auto &q = vertices[y];
        if (p.a == q.a)
            return u_target.has_arc(p.b, q.b);
        return t.has_arc(p.c[q.a], q.c[p.a]);
    });
    return target;
}

VertexMap lexico_upper_hom(const OrientedGraph &orientation, const LexicoFactorData &data)
{
    const auto &g = data.g;
    const auto &h = data.h;
    require_orientation(orientation, product(ProductKind::lexicographic, g, h),
                        "lexicographic product");
    require_proper(square(g), data.g_square_coloring, "colouring of the left factor's square");
    const int k = color_count(data.g_square_coloring);
    const int l = data.u_target.order();
    const int n = h.order();
    const ProductShape shape{g.order(), n};
    const auto lambda = layer_homs(orientation, shape, Side::right, data.u_target,
                                   data.h_layer_homs, "lexicographic");
    const auto t = bipartite_target(n).graph;
    const LexicoCoding coding{k, l, t.order(), checked_pow(t.order(), k - 1)};
    const auto &alpha = data.g_square_coloring;

    // mu_{u,u'}: the arcs between layers u and u' form an orientation of K_{n,n}
    auto cross_map = [&](Vertex u, Vertex w) {
        const Vertex lo = std::min(u, w);
        const Vertex hi = std::max(u, w);
        std::vector<Arc> arcs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (orientation.has_arc(shape.index(lo, i), shape.index(hi, j)))
                    arcs.push_back({i, n + j});
                else
                    arcs.push_back({n + j, i});
            }
        auto mu = bipartite_hom(OrientedGraph(2 * n, std::move(arcs)), n, n);
        const int offset = u == lo ? 0 : n;
        return VertexMap(mu.begin() + offset, mu.begin() + offset + n);
    };

    VertexMap map(static_cast<std::size_t>(shape.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        // c coordinates of layer u, one column per vertex v; default is T-vertex 0
        std::vector<std::vector<int>> c(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(k), 0));
        std::vector<bool> colour_seen(static_cast<std::size_t>(k), false);
        for (Vertex w : g.neighbors(u)) {
            const int colour = alpha[w];
            if (colour_seen[colour])
                throw PremiseViolation("two neighbours of " + std::to_string(u) +
                                       " share a square colour");
            colour_seen[colour] = true;
            const auto mu = cross_map(u, w);
            for (int v = 0; v < n; ++v)
                c[v][colour] = mu[v];
        }
        for (int v = 0; v < n; ++v)
            map[shape.index(u, v)] =
                static_cast<Vertex>(coding.encode(alpha[u], lambda[u][v], c[v]));
    }
    return map;
}

// ---------------------------------------------------------------------------------------------
// Strong products.

std::int64_t strong_upper_order(int k, int l, int m, int n)
{
    if (k < 1 || l < 1 || m < 1 || n < 1 || k > 30)
        throw InvalidArgument("strong target needs positive parameters and k <= 30");
    return ((std::int64_t{1} << k) - 1) * l * m * n;
}

namespace {

struct StrongCoding {
    int k, l, m, n;

    std::int64_t alpha_block() const { return std::int64_t{m} * n * ((std::int64_t{1} << k) - 1); }

    // beta is 1-based; bits holds c_1..c_{beta-1} in bits 0..beta-2
    std::int64_t encode(int alpha, int beta, int mu, int lambda, std::int64_t bits) const
    {
        const std::int64_t width = std::int64_t{1} << (beta - 1);
        return alpha * alpha_block() + (width - 1) * m * n + (std::int64_t{mu} * n + lambda) * width +
               bits;
    }

    void decode(std::int64_t index, int &alpha, int &beta, int &mu, int &lambda,
                std::int64_t &bits) const
    {
        alpha = static_cast<int>(index / alpha_block());
        auto rest = index % alpha_block();
        beta = 1;
        while (rest >= (std::int64_t{1} << (beta - 1)) * m * n) {
            rest -= (std::int64_t{1} << (beta - 1)) * m * n;
            ++beta;
        }
        const std::int64_t width = std::int64_t{1} << (beta - 1);
        bits = rest % width;
        const auto pair = rest / width;
        mu = static_cast<int>(pair / n);
        lambda = static_cast<int>(pair % n);
    }
};

} // namespace

StructuredTarget strong_upper_target(int k, int l, const OrientedGraph &g_target,
                                     const OrientedGraph &h_target, const Limits &limits)
{
    const int m = g_target.order();
    const int n = h_target.order();
    const auto order = strong_upper_order(k, l, m, n);
    check_construction_order(order, limits);
    const StrongCoding coding{k, l, m, n};

    struct Decoded {
        int alpha, beta, mu, lambda;
        std::int64_t bits;
        bool bit(int i) const { return (bits >> (i - 1)) & 1; } // c_i, 1-based
    };
    std::vector<Decoded> vertices(static_cast<std::size_t>(order));
    StructuredTarget target;
    for (std::int64_t x = 0; x < order; ++x) {
        auto &v = vertices[x];
        coding.decode(x, v.alpha, v.beta, v.mu, v.lambda, v.bits);
        VertexLabel label{"", {v.alpha + 1, v.beta, v.mu + 1, v.lambda + 1}};
        for (int i = 1; i < v.beta; ++i)
            label.coords.push_back(v.bit(i));
        target.labels.push_back(std::move(label));
    }
    target.graph = build_target(static_cast<int>(order), [&](Vertex x, Vertex y) {
        const auto &p = vertices[x];
        const auto &q = vertices[y];
        if (p.alpha == q.alpha)
            return h_target.has_arc(p.lambda, q.lambda);
        if (p.beta == q.beta)
            return g_target.has_arc(p.mu, q.mu);
        if (p.beta < q.beta)
            return q.bit(p.beta);
        return !p.bit(q.beta);
    });
    return target;
}

VertexMap strong_upper_hom(const OrientedGraph &orientation, const StrongFactorData &data)
{
    const auto &g = data.g;
    const auto &h = data.h;
    require_orientation(orientation, product(ProductKind::strong, g, h), "strong product");
    require_proper(g, data.g_coloring, "colouring of the left factor");
    require_proper(square(h), data.h_square_coloring, "colouring of the right factor's square");
    const ProductShape shape{g.order(), h.order()};
    const auto g_layers = layer_homs(orientation, shape, Side::left, data.g_target,
                                     data.g_layer_homs, "strong (left layers)");
    const auto h_layers = layer_homs(orientation, shape, Side::right, data.h_target,
                                     data.h_layer_homs, "strong (right layers)");
    const StrongCoding coding{color_count(data.h_square_coloring), color_count(data.g_coloring),
                              data.g_target.order(), data.h_target.order()};
    const auto &gamma = data.g_coloring;
    const auto &hc = data.h_square_coloring;

    VertexMap map(static_cast<std::size_t>(shape.order()));
    for (Vertex x = 0; x < shape.order(); ++x) {
        const auto [u, v] = shape.split(x);
        std::int64_t bits = 0;
        std::int64_t fixed = 0;
        auto set_bit = [&](int colour, bool value, Vertex other) {
            const auto mask = std::int64_t{1} << colour;
            if ((fixed & mask) && (((bits & mask) != 0) != value))
                throw PremiseViolation(
                    "cross arcs at product vertex " + std::to_string(x) + " (with " +
                    std::to_string(other) + ") demand opposite values for c_" +
                    std::to_string(colour + 1));
            fixed |= mask;
            if (value)
                bits |= mask;
        };
        for (Vertex y : orientation.in_neighbors(x)) {
            const auto [w, z] = shape.split(y);
            if (w != u && hc[z] < hc[v])
                set_bit(hc[z], true, y);
        }
        for (Vertex y : orientation.out_neighbors(x)) {
            const auto [w, z] = shape.split(y);
            if (w != u && hc[z] < hc[v])
                set_bit(hc[z], false, y);
        }
        map[x] = static_cast<Vertex>(
            coding.encode(gamma[u], hc[v] + 1, g_layers[v][u], h_layers[u][v], bits));
    }
    return map;
}

// ---------------------------------------------------------------------------------------------
// Cartesian products.

std::int64_t cartesian_upper_order(int k, int t_order, int u_order)
{
    if (k < 1 || t_order < 1 || u_order < 1)
        throw InvalidArgument("cartesian target needs positive parameters");
    return std::int64_t{k} * t_order * u_order;
}

StructuredTarget cartesian_upper_target(int k, const OrientedGraph &g_target,
                                        const OrientedGraph &h_target, const Limits &limits)
{
    const int tn = g_target.order();
    const int un = h_target.order();
    const auto order = cartesian_upper_order(k, tn, un);
    check_construction_order(order, limits);
    StructuredTarget target;
    for (std::int64_t x = 0; x < order; ++x) {
        const int c = static_cast<int>(x / (std::int64_t{tn} * un));
        const int a = static_cast<int>(x / un % tn);
        const int b = static_cast<int>(x % un);
        target.labels.push_back({"", {c + 1, a + 1, b + 1}});
    }
    target.graph = build_target(static_cast<int>(order), [&](Vertex x, Vertex y) {
        const int cx = x / (tn * un), cy = y / (tn * un);
        if (cx == cy)
            return g_target.has_arc(x / un % tn, y / un % tn);
        return h_target.has_arc(x % un, y % un);
    });
    return target;
}

VertexMap cartesian_upper_hom(const OrientedGraph &orientation, const CartesianFactorData &data)
{
    const auto &g = data.g;
    const auto &h = data.h;
    require_orientation(orientation, product(ProductKind::cartesian, g, h), "cartesian product");
    require_proper(h, data.h_coloring, "colouring of the right factor");
    const ProductShape shape{g.order(), h.order()};
    const auto alpha = layer_homs(orientation, shape, Side::left, data.g_target,
                                  data.g_layer_homs, "cartesian (left layers)");
    const auto beta = layer_homs(orientation, shape, Side::right, data.h_target,
                                 data.h_layer_homs, "cartesian (right layers)");
    const int tn = data.g_target.order();
    const int un = data.h_target.order();
    VertexMap map(static_cast<std::size_t>(shape.order()));
    for (Vertex x = 0; x < shape.order(); ++x) {
        const auto [u, v] = shape.split(x);
        map[x] = (data.h_coloring[v] * tn + alpha[v][u]) * un + beta[u][v];
    }
    return map;
}

// ---------------------------------------------------------------------------------------------
// Direct products.

std::int64_t direct_upper_order_formula(int k, int l)
{
    if (k < 1 || l < 1 || k * (l - 1) > 60)
        throw InvalidArgument("direct target needs k, l >= 1 and k(l-1) <= 60");
    if (l == 1)
        return k;
    return ((std::int64_t{1} << (k * (l - 1))) - 1) / ((std::int64_t{1} << (l - 1)) - 1);
}

std::int64_t direct_upper_order(int k, int l)
{
    return l * direct_upper_order_formula(k, l);
}

namespace {

/// alpha in 1..k, beta in 1..l; slot (i, j) for i < alpha, j != beta is a free bit.
struct DirectCoding {
    int k, l;

    int free_bits(int alpha) const { return (alpha - 1) * (l - 1); }

    std::int64_t block_offset(int alpha) const
    {
        std::int64_t offset = 0;
        for (int a = 1; a < alpha; ++a)
            offset += std::int64_t{l} << free_bits(a);
        return offset;
    }

    /// c is (alpha-1) x l, row i-1 / column j-1 for c_{i,j}
    std::int64_t encode(int alpha, int beta, const std::vector<std::vector<int>> &c) const
    {
        std::int64_t bits = 0;
        int pos = 0;
        for (int i = 1; i < alpha; ++i)
            for (int j = 1; j <= l; ++j) {
                if (j == beta)
                    continue;
                if (c[i - 1][j - 1])
                    bits |= std::int64_t{1} << pos;
                ++pos;
            }
        return block_offset(alpha) + (std::int64_t{beta - 1} << free_bits(alpha)) + bits;
    }

    void decode(std::int64_t index, int &alpha, int &beta, std::vector<std::vector<int>> &c) const
    {
        alpha = 1;
        while (index >= (std::int64_t{l} << free_bits(alpha))) {
            index -= std::int64_t{l} << free_bits(alpha);
            ++alpha;
        }
        beta = static_cast<int>(index >> free_bits(alpha)) + 1;
        auto bits = index & ((std::int64_t{1} << free_bits(alpha)) - 1);
        c.assign(static_cast<std::size_t>(alpha - 1), std::vector<int>(static_cast<std::size_t>(l), 0));
        int pos = 0;
        for (int i = 1; i < alpha; ++i)
            for (int j = 1; j <= l; ++j) {
                if (j == beta)
                    continue;
                c[i - 1][j - 1] = static_cast<int>((bits >> pos) & 1);
                ++pos;
            }
    }
};

} // namespace

StructuredTarget direct_upper_target(int k, int l, const Limits &limits)
{
    const auto order = direct_upper_order(k, l);
    check_construction_order(order, limits);
    const DirectCoding coding{k, l};
    struct Decoded {
        int alpha, beta;
        std::vector<std::vector<int>> c;
    };
    std::vector<Decoded> vertices(static_cast<std::size_t>(order));
    StructuredTarget target;
    for (std::int64_t x = 0; x < order; ++x) {
        auto &v = vertices[x];
        coding.decode(x, v.alpha, v.beta, v.c);
        VertexLabel label{"", {v.alpha, v.beta}};
        for (const auto &row : v.c)
            label.coords.insert(label.coords.end(), row.begin(), row.end());
        target.labels.push_back(std::move(label));
    }
    target.graph = build_target(static_cast<int>(order), [&](Vertex x, Vertex y) {
        const auto &p = vertices[x];
        const auto &q = vertices[y];
        if (p.alpha == q.alpha || p.beta == q.beta)
            return false;
        // the higher endpoint's bit at the lower endpoint's (alpha, beta)
        const auto &high = p.alpha > q.alpha ? p : q;
        const auto &low = p.alpha > q.alpha ? q : p;
        const bool bit = high.c[low.alpha - 1][low.beta - 1] != 0;
        return bit == (p.beta < q.beta);
    });
    return target;
}

VertexMap direct_upper_hom(const OrientedGraph &orientation, const DirectFactorData &data)
{
    const auto &g = data.g;
    const auto &h = data.h;
    require_orientation(orientation, product(ProductKind::direct, g, h), "direct product");
    require_proper(square(g), data.g_square_coloring, "colouring of the left factor's square");
    require_proper(square(h), data.h_square_coloring, "colouring of the right factor's square");
    const int k = color_count(data.g_square_coloring);
    const int l = color_count(data.h_square_coloring);
    direct_upper_order_formula(k, l); // range check
    const DirectCoding coding{k, l};
    const auto &a = data.g_square_coloring;
    const auto &b = data.h_square_coloring;
    const ProductShape shape{g.order(), h.order()};

    VertexMap map(static_cast<std::size_t>(shape.order()));
    for (Vertex x = 0; x < shape.order(); ++x) {
        const auto [u, v] = shape.split(x);
        const int alpha = a[u] + 1;
        const int beta = b[v] + 1;
        std::vector<std::vector<int>> c(static_cast<std::size_t>(alpha - 1),
                                        std::vector<int>(static_cast<std::size_t>(l), 0));
        std::vector<std::vector<bool>> set(c.size(), std::vector<bool>(static_cast<std::size_t>(l)));
        auto assign = [&](Vertex y, int value) {
            const auto [w, z] = shape.split(y);
            if (a[w] >= a[u])
                return;
            if (set[a[w]][b[z]])
                throw PremiseViolation("slot c_{" + std::to_string(a[w] + 1) + "," +
                                       std::to_string(b[z] + 1) + "} of product vertex " +
                                       std::to_string(x) + " is claimed twice");
            set[a[w]][b[z]] = true;
            c[a[w]][b[z]] = value;
        };
        for (Vertex y : orientation.out_neighbors(x))
            assign(y, b[v] < b[shape.split(y).right] ? 1 : 0);
        for (Vertex y : orientation.in_neighbors(x))
            assign(y, b[v] < b[shape.split(y).right] ? 0 : 1);
        map[x] = static_cast<Vertex>(coding.encode(alpha, beta, c));
    }
    return map;
}

} // namespace orichrom
