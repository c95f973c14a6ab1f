#include "orichrom/verify.hpp"

#include "orichrom/constructions.hpp"
#include "orichrom/error.hpp"
#include "orichrom/exact.hpp"
#include "orichrom/products.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace orichrom {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

using json = nlohmann::ordered_json;

/// Generator for sample i, independent of how samples are split across workers.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t i)
{
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ i));
}

int colours_used(const VertexMap &c)
{
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

UndirectedGraph random_graph(int n, std::mt19937_64 &rng)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() & 1)
                edges.push_back({u, v});
    return UndirectedGraph(n, std::move(edges));
}

OrientedGraph random_orientation(const UndirectedGraph &g, std::mt19937_64 &rng)
{
    std::vector<Arc> arcs;
    for (const auto &e : g.edges())
        arcs.push_back((rng() & 1) ? Arc{e.u, e.v} : Arc{e.v, e.u});
    return OrientedGraph(g.order(), std::move(arcs));
}

// --- 1 -----------------------------------------------------------------------------------------

void check_c3(const VerifyOptions &o, CheckResult &r)
{
    const int chi_o = chi_o_undirected(cycle(3), o.limits);
    const auto plus = chi_o_plus(cycle(3), 5, o.limits);
    r.details["chi_o"] = chi_o;
    r.details["chi_o_plus"] = plus.value ? json(*plus.value) : json(nullptr);
    r.correct = chi_o == 3 && plus.value == 4;
    r.summary = "chi_o(C3)=" + std::to_string(chi_o) +
                " chi_o+(C3)=" + (plus.value ? std::to_string(*plus.value) : "?");
}

// --- 2 -----------------------------------------------------------------------------------------

void check_bipartite_chi(const VerifyOptions &o, CheckResult &r)
{
    std::vector<std::pair<int, int>> pairs;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 4; ++n)
            pairs.emplace_back(m, n);
    pairs.emplace_back(3, 4);
    r.correct = true;
    json rows = json::array();
    int wrong = 0;
    for (auto [m, n] : pairs) {
        const int expected = m + std::min(n, 1 << m);
        const auto sweep = chi_o_undirected_sweep(complete_bipartite(m, n), o.limits);
        rows.push_back({{"m", m}, {"n", n}, {"chi_o", sweep.value}, {"expected", expected},
                        {"witness_orientation", sweep.witness}});
        if (sweep.value != expected) {
            r.correct = false;
            ++wrong;
        }
    }
    r.details["cases"] = rows;
    r.summary = std::to_string(pairs.size() - wrong) + "/" + std::to_string(pairs.size()) +
                " (m,n) pairs match m+min(n,2^m)";
}

// --- 3 -----------------------------------------------------------------------------------------

void check_bipartite_hom(const VerifyOptions &o, CheckResult &r)
{
    std::uint64_t checked = 0, failed = 0;
    bool orders_ok = true;
    for (int m = 1; m <= 3; ++m) {
        const auto target = bipartite_target(m);
        orders_ok = orders_ok && target.order() == m + (1 << m);
        for (int n = 1; n <= 4; ++n)
            for (const auto &d : Orientations(complete_bipartite(m, n), o.limits.max_edges)) {
                ++checked;
                if (!verify_homomorphism(d, target.graph, bipartite_hom(d, m, n)))
                    ++failed;
            }
    }
    r.details["orientations"] = checked;
    r.details["failures"] = failed;
    r.details["target_orders_ok"] = orders_ok;
    r.correct = failed == 0 && orders_ok;
    r.summary = std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " orientations map into the bipartite target";
}

// --- 4 -----------------------------------------------------------------------------------------

void check_strong_paths(const VerifyOptions &o, CheckResult &r)
{
    if (o.k < 3 || o.l < 3)
        throw InvalidArgument("strong-paths needs k, l >= 3");
    const auto p = product(ProductKind::strong, directed_path(o.k), directed_path(o.l));
    const std::vector<int> residues{1, 2, 3};
    const auto t7 = circulant_tournament(7, residues);
    const bool upper = verify_homomorphism(p, t7, t7_strong_grid_hom(o.k, o.l));

    const ProductShape shape{o.k, o.l};
    // [x1,y1],[x2,y1],[x2,y2],[x2,y3],[x3,y1],[x3,y2],[x3,y3] with 1-based coordinates
    const std::vector<std::pair<int, int>> cells{{1, 1}, {2, 1}, {2, 2}, {2, 3},
                                                 {3, 1}, {3, 2}, {3, 3}};
    std::vector<Vertex> witness;
    for (auto [i, j] : cells)
        witness.push_back(shape.index(i - 1, j - 1));
    const bool lower = is_oriented_clique(induced_subgraph(p, witness));

    const int chi = chi_o_oriented(p, o.limits);
    r.details["k"] = o.k;
    r.details["l"] = o.l;
    r.details["t7_hom_verifies"] = upper;
    r.details["witness_is_oriented_clique"] = lower;
    r.details["chi_o"] = chi;
    r.correct = upper && lower && chi == 7;
    r.summary = "chi_o(DP" + std::to_string(o.k) + " strong DP" + std::to_string(o.l) +
                ")=" + std::to_string(chi) + ", T7 hom " + yes_no(upper) + ", clique witness " +
                yes_no(lower);
}

// --- 5 -----------------------------------------------------------------------------------------

void check_t7_grid(const VerifyOptions &, CheckResult &r)
{
    const std::vector<int> residues{1, 2, 3};
    const auto t7 = circulant_tournament(7, residues);
    int checked = 0, failed = 0;
    for (int k = 3; k <= 20; ++k)
        for (int l = 3; l <= 20; ++l) {
            ++checked;
            const auto p = product(ProductKind::strong, directed_path(k), directed_path(l));
            if (!verify_homomorphism(p, t7, t7_strong_grid_hom(k, l)))
                ++failed;
        }
    r.details["grids"] = checked;
    r.details["failures"] = failed;
    r.correct = failed == 0;
    r.summary = std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " grids 3<=k,l<=20 map into T7";
}

// --- 6 -----------------------------------------------------------------------------------------

void check_lexico_paths(const VerifyOptions &o, CheckResult &r)
{
    const auto d = product(ProductKind::lexicographic, directed_path(3), directed_path(3));
    const bool clique = is_oriented_clique(d);
    const int chi = chi_o_oriented(d, o.limits);
    r.details["oriented_clique"] = clique;
    r.details["chi_o"] = chi;
    r.correct = clique && chi == 9;
    r.summary = "chi_o(DP3[DP3])=" + std::to_string(chi) + ", oriented clique " + yes_no(clique);
}

// --- 7 -----------------------------------------------------------------------------------------

void check_cartesian_paths(const VerifyOptions &o, CheckResult &r)
{
    const Orientations paths(path(4), o.limits.max_edges);
    const auto c3 = directed_cycle(3);
    int checked = 0, failed = 0;
    for (const auto &p : paths)
        for (const auto &q : paths) {
            ++checked;
            const auto grid = product(ProductKind::cartesian, p, q);
            if (!verify_homomorphism(grid, c3, c3_cartesian_path_hom(p, q)))
                ++failed;
        }
    r.details["pairs"] = checked;
    r.details["failures"] = failed;
    r.correct = failed == 0 && checked == 64;
    r.summary = std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " orientation pairs of P4 map into C3";
}

// --- 8 -----------------------------------------------------------------------------------------

void check_epsilon(const VerifyOptions &o, CheckResult &r)
{
    r.correct = true;
    json rows = json::array();
    std::ostringstream summary;
    for (int n = 1; n <= 4; ++n) {
        const auto eps = universal_tournament_size(n, o.limits).size;
        const auto bounds = moon_bounds(n);
        const bool inside = bounds.lower.at_most(eps) && bounds.upper.at_least(eps);
        rows.push_back({{"n", n}, {"epsilon", eps}, {"lower", bounds.lower.to_string()},
                        {"upper", bounds.upper.to_string()}, {"within_bounds", inside}});
        r.correct = r.correct && inside;
        summary << (n > 1 ? " " : "") << "eps(" << n << ")=" << eps;
        if (n == 3)
            r.correct = r.correct && eps == 4;
    }
    const auto plus = chi_o_plus(complete(3), 5, o.limits);
    r.details["cases"] = rows;
    r.details["chi_o_plus_K3"] = plus.value ? json(*plus.value) : json(nullptr);
    r.correct = r.correct && plus.value == 4;
    summary << ", chi_o+(K3)=" << (plus.value ? std::to_string(*plus.value) : "?");
    r.summary = summary.str();
}

// --- 9 -----------------------------------------------------------------------------------------

void check_square_coloring(const VerifyOptions &o, CheckResult &r)
{
    r.correct = true;
    json rows = json::array();
    std::ostringstream summary;
    for (const auto &[name, g] : {std::pair{"P5", path(5)}, std::pair{"C6", cycle(6)}}) {
        const auto sq = square(g);
        const auto sigma = optimal_proper_coloring(sq, o.limits);
        const int k = colours_used(sigma);
        const auto palette = square_palette_size(k);
        std::uint64_t checked = 0, failed = 0;
        int most = 0;
        for (const auto &d : Orientations(g, o.limits.max_edges)) {
            ++checked;
            const auto c = square_coloring(g, sigma, d);
            most = std::max(most, colours_used(c));
            if (!verify_oriented_coloring(d, c) || colours_used(c) > palette)
                ++failed;
        }
        rows.push_back({{"graph", name}, {"chi_square", k}, {"palette", palette},
                        {"orientations", checked}, {"failures", failed},
                        {"largest_label_used", most}});
        r.correct = r.correct && failed == 0;
        summary << (summary.tellp() > 0 ? ", " : "") << name << ": " << checked - failed << "/"
                << checked << " within " << palette << " labels";
    }
    r.details["cases"] = rows;
    r.summary = summary.str();
}

// --- 10 ----------------------------------------------------------------------------------------

OrientedGraph receiving_target(const UndirectedGraph &g, const Limits &limits)
{
    const auto found = chi_o_plus(g, limits.max_target_order, limits);
    if (!found.target)
        throw CapExceeded("no factor target within the enumeration cap");
    return *found.target;
}

void check_cartesian_w(const VerifyOptions &o, CheckResult &r)
{
    CartesianFactorData data;
    data.g = path(3);
    data.h = path(3);
    data.h_coloring = optimal_proper_coloring(data.h, o.limits);
    data.g_target = receiving_target(data.g, o.limits);
    data.h_target = receiving_target(data.h, o.limits);
    const int k = colours_used(data.h_coloring);
    const auto w = cartesian_upper_target(k, data.g_target, data.h_target, o.limits);

    std::uint64_t checked = 0, failed = 0;
    for (const auto &d : Orientations(product(ProductKind::cartesian, data.g, data.h),
                                      o.limits.max_edges)) {
        ++checked;
        if (!verify_homomorphism(d, w.graph, cartesian_upper_hom(d, data)))
            ++failed;
    }
    r.details["target_order"] = w.order();
    r.details["orientations"] = checked;
    r.details["failures"] = failed;
    r.correct = w.order() == 18 && failed == 0 && checked == 4096;
    r.summary = "order " + std::to_string(w.order()) + " (expected 18), " +
                std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " orientations verify";
}

// --- 11 ----------------------------------------------------------------------------------------

void check_direct_w(const VerifyOptions &o, CheckResult &r)
{
    DirectFactorData data;
    data.g = path(3);
    data.h = path(3);
    data.g_square_coloring = optimal_proper_coloring(square(data.g), o.limits);
    data.h_square_coloring = optimal_proper_coloring(square(data.h), o.limits);
    const int k = colours_used(data.g_square_coloring);
    const int l = colours_used(data.h_square_coloring);
    const auto w = direct_upper_target(k, l, o.limits);

    std::uint64_t checked = 0, failed = 0;
    for (const auto &d :
         Orientations(product(ProductKind::direct, data.g, data.h), o.limits.max_edges)) {
        ++checked;
        if (!verify_homomorphism(d, w.graph, direct_upper_hom(d, data)))
            ++failed;
    }
    r.details["k"] = k;
    r.details["l"] = l;
    r.details["target_order"] = w.order();
    r.details["closed_form_without_factor_l"] = direct_upper_order_formula(k, l);
    r.details["orientations"] = checked;
    r.details["failures"] = failed;
    r.correct = w.order() == 21 && failed == 0 && checked == 256;
    r.summary = "order " + std::to_string(w.order()) + " (expected 21), " +
                std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " orientations verify";
}

// --- 12 ----------------------------------------------------------------------------------------

struct SampleOutcome {
    int verified = 0;
    int premise_violations = 0;
    int rejected = 0;
    int received_by_search = 0; ///< failures for which some other map into the target exists
};

SampleOutcome sample_homs(const UndirectedGraph &product_graph, const OrientedGraph &target,
                          const VerifyOptions &o, std::uint64_t stream,
                          const std::function<VertexMap(const OrientedGraph &)> &hom)
{
    const Orientations all(product_graph, o.limits.max_edges);
    SampleOutcome out;
    for (int i = 0; i < o.samples; ++i) {
        auto rng = sample_rng(o.seed ^ stream, static_cast<std::uint64_t>(i));
        const auto d = all[rng() % all.size()];
        try {
            if (verify_homomorphism(d, target, hom(d))) {
                ++out.verified;
                continue;
            }
            ++out.rejected;
        } catch (const PremiseViolation &) {
            ++out.premise_violations;
        }
        if (find_homomorphism(d, target))
            ++out.received_by_search;
    }
    return out;
}

json outcome_json(const SampleOutcome &s)
{
    return {{"verified", s.verified},
            {"premise_violations", s.premise_violations},
            {"failed_verification", s.rejected},
            {"failures_received_by_search", s.received_by_search}};
}

void check_strong_lexico_w(const VerifyOptions &o, CheckResult &r)
{
    StrongFactorData strong;
    strong.g = path(3);
    strong.h = path(3);
    strong.g_coloring = optimal_proper_coloring(strong.g, o.limits);
    strong.h_square_coloring = optimal_proper_coloring(square(strong.h), o.limits);
    strong.g_target = receiving_target(strong.g, o.limits);
    strong.h_target = receiving_target(strong.h, o.limits);
    const auto w_strong = strong_upper_target(colours_used(strong.h_square_coloring),
                                              colours_used(strong.g_coloring), strong.g_target,
                                              strong.h_target, o.limits);
    const auto strong_outcome = sample_homs(
        product(ProductKind::strong, strong.g, strong.h), w_strong.graph, o, 0x5354,
        [&](const OrientedGraph &d) { return strong_upper_hom(d, strong); });

    LexicoFactorData lexico;
    lexico.g = path(3);
    lexico.h = path(2);
    lexico.g_square_coloring = optimal_proper_coloring(square(lexico.g), o.limits);
    lexico.u_target = receiving_target(lexico.h, o.limits);
    const int k = colours_used(lexico.g_square_coloring);
    const int l = lexico.u_target.order();
    const int n = lexico.h.order();
    std::int64_t formula = k * l;
    for (int i = 1; i < k; ++i)
        formula *= n + (1 << n);
    const auto w_lexico = lexico_upper_target(k, lexico.u_target, n, o.limits);
    const auto lexico_outcome = sample_homs(
        product(ProductKind::lexicographic, lexico.g, lexico.h), w_lexico.graph, o, 0x4c58,
        [&](const OrientedGraph &d) { return lexico_upper_hom(d, lexico); });

    r.details["strong"] = {{"target_order", w_strong.order()},
                           {"expected_order", 126},
                           {"samples", o.samples},
                           {"outcome", outcome_json(strong_outcome)}};
    r.details["lexicographic"] = {{"k", k},
                                  {"l", l},
                                  {"n", n},
                                  {"target_order", w_lexico.order()},
                                  {"expected_order", formula},
                                  {"samples", o.samples},
                                  {"outcome", outcome_json(lexico_outcome)}};
    r.correct = w_strong.order() == 126 && w_lexico.order() == formula &&
                strong_outcome.verified == o.samples && lexico_outcome.verified == o.samples &&
                o.samples >= 1000;
    r.summary = "strong: order " + std::to_string(w_strong.order()) + ", " +
                std::to_string(strong_outcome.verified) + "/" + std::to_string(o.samples) +
                " verify (" + std::to_string(strong_outcome.received_by_search) +
                " others map by search); lexicographic: order " + std::to_string(w_lexico.order()) + " (formula " +
                std::to_string(formula) + "), " + std::to_string(lexico_outcome.verified) + "/" +
                std::to_string(o.samples) + " verify";
}

// --- 13 ----------------------------------------------------------------------------------------

/// Oriented supergraph of t on two extra vertices, then relabelled by a random permutation.
std::pair<OrientedGraph, VertexMap> random_extension(const OrientedGraph &t, std::mt19937_64 &rng)
{
    const int n = t.order() + 2;
    std::vector<Arc> arcs(t.arcs().begin(), t.arcs().end());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (v >= t.order() && (rng() & 1))
                arcs.push_back((rng() & 1) ? Arc{u, v} : Arc{v, u});
    VertexMap perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto &a : arcs)
        a = {perm[a.tail], perm[a.head]};
    return {OrientedGraph(n, std::move(arcs)), perm};
}

void check_properties(const VerifyOptions &o, CheckResult &r)
{
    std::map<std::string, int> failures;
    auto expect = [&](bool ok, const char *what) {
        if (!ok)
            ++failures[what];
        else
            failures.try_emplace(what, 0);
    };
    for (int i = 0; i < o.property_instances; ++i) {
        auto rng = sample_rng(o.seed, static_cast<std::uint64_t>(i));
        const int n1 = 1 + static_cast<int>(rng() % 5);
        const int n2 = 1 + static_cast<int>(rng() % 5);
        const auto g = random_graph(n1, rng);
        const auto h = random_graph(n2, rng);
        const std::size_t vg = n1, vh = n2, eg = g.size(), eh = h.size();

        const auto cart = product(ProductKind::cartesian, g, h);
        const auto strong = product(ProductKind::strong, g, h);
        const auto direct = product(ProductKind::direct, g, h);
        const auto lex = product(ProductKind::lexicographic, g, h);
        expect(cart.size() == vg * eh + eg * vh, "cartesian edge count");
        expect(direct.size() == 2 * eg * eh, "direct edge count");
        expect(strong.size() == vg * eh + eg * vh + 2 * eg * eh, "strong edge count");
        expect(lex.size() == vg * eh + eg * vh * vh, "lexicographic edge count");
        expect(strong.contains(cart), "cartesian within strong");
        expect(lex.contains(strong), "strong within lexicographic");
        expect(strong.contains(direct), "direct within strong");

        const auto d = random_orientation(g, rng);
        const auto e = random_orientation(h, rng);
        const auto alpha = optimal_oriented_coloring(d, o.limits);
        const auto beta = optimal_oriented_coloring(e, o.limits);
        const auto t = quotient_target(d, alpha);
        const auto u = quotient_target(e, beta);
        for (auto kind : {ProductKind::cartesian, ProductKind::strong, ProductKind::lexicographic}) {
            const auto m = product_hom_compose(kind, d, e, t, u, alpha, beta);
            expect(verify_homomorphism(product(kind, d, e), product(kind, t, u), m),
                   "product_hom_compose");
        }
        const auto dd = product(ProductKind::direct, d, e);
        expect(verify_homomorphism(dd, d, projection_hom(Side::left, d, e)), "projection_hom");
        expect(verify_homomorphism(dd, e, projection_hom(Side::right, d, e)), "projection_hom");

        const auto [s, relabel] = random_extension(t, rng);
        VertexMap into_s(static_cast<std::size_t>(t.order()));
        for (Vertex v = 0; v < t.order(); ++v)
            into_s[v] = relabel[v];
        expect(verify_homomorphism(t, s, into_s), "composition premise");
        expect(verify_homomorphism(d, s, compose(into_s, alpha)), "homomorphism composition");
        if (const auto found = find_homomorphism(t, s))
            expect(verify_homomorphism(d, s, compose(*found, alpha)), "homomorphism composition");
    }
    json table = json::object();
    int total = 0;
    for (const auto &[what, count] : failures) {
        table[what] = count;
        total += count;
    }
    r.details["instances"] = o.property_instances;
    r.details["failures"] = table;
    r.correct = total == 0 && o.property_instances >= 500;
    r.summary = std::to_string(o.property_instances) + " random instances, " +
                std::to_string(failures.size()) + " properties, " + std::to_string(total) +
                " failures";
}

struct Entry {
    const char *name;
    double budget_s;
    void (*run)(const VerifyOptions &, CheckResult &);
};

const std::vector<Entry> &entries()
{
    static const std::vector<Entry> table{
        {"c3", 1, check_c3},
        {"bipartite-chi", 120, check_bipartite_chi},
        {"bipartite-hom", 60, check_bipartite_hom},
        {"strong-paths", 60, check_strong_paths},
        {"t7-grid", 5, check_t7_grid},
        {"lexico-paths", 120, check_lexico_paths},
        {"cartesian-paths", 5, check_cartesian_paths},
        {"epsilon", 300, check_epsilon},
        {"square-coloring", 60, check_square_coloring},
        {"cartesian-w", 120, check_cartesian_w},
        {"direct-w", 60, check_direct_w},
        {"strong-lexico-w", 300, check_strong_lexico_w},
        {"properties", 120, check_properties},
    };
    return table;
}

} // namespace

const std::vector<std::string> &check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &e : entries())
            out.emplace_back(e.name);
        return out;
    }();
    return names;
}

CheckResult run_check(std::string_view name, const VerifyOptions &options)
{
    const auto &table = entries();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const Entry &e) { return name == e.name; });
    if (it == table.end())
        throw InvalidArgument("unknown check '" + std::string(name) + "'");
    CheckResult r;
    r.criterion = static_cast<int>(it - table.begin()) + 1;
    r.name = it->name;
    r.budget_s = it->budget_s;
    const auto start = std::chrono::steady_clock::now();
    it->run(options, r);
    r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace orichrom
