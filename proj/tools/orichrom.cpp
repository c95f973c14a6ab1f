// orichrom: command-line front end for the oriented colouring library.

#include "orichrom/canonical.hpp"
#include "orichrom/constructions.hpp"
#include "orichrom/error.hpp"
#include "orichrom/exact.hpp"
#include "orichrom/formats.hpp"
#include "orichrom/products.hpp"
#include "orichrom/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

using namespace orichrom;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Settings {
    std::string format = "json";
    std::uint64_t seed = 1;
    int jobs = 1;
    bool witness = false;
    bool timing = false;
    Limits limits;
};

/// A graph a command can print in graph6 / digraph6 / dot form.
struct GraphOutput {
    AnyGraph graph;
    std::vector<std::string> labels;
};

struct Outcome {
    Report report;
    std::optional<GraphOutput> graph;
    bool failed = false;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

UndirectedGraph need_undirected(const std::string &spec)
{
    auto g = parse_graph_spec(spec);
    if (auto *u = std::get_if<UndirectedGraph>(&g))
        return *u;
    throw UsageError("'" + spec + "' is an oriented graph; an undirected graph is required");
}

OrientedGraph need_oriented(const std::string &spec)
{
    auto g = parse_graph_spec(spec);
    if (auto *d = std::get_if<OrientedGraph>(&g))
        return *d;
    throw UsageError("'" + spec + "' is undirected; an oriented graph is required");
}

json graph_json(const AnyGraph &g)
{
    return std::visit([](const auto &x) { return to_json(x); }, g);
}

json map_json(const VertexMap &m) { return json(m); }

std::vector<std::string> label_strings(const StructuredTarget &t)
{
    std::vector<std::string> out;
    for (const auto &l : t.labels)
        out.push_back(l.to_string());
    return out;
}

json caps_json(const Settings &s)
{
    return {{"edges", s.limits.max_edges},
            {"target_order", s.limits.max_target_order},
            {"vertices", s.limits.max_vertices},
            {"universal_n", s.limits.max_universal_n},
            {"construction_order", s.limits.max_construction_order},
            {"jobs", s.limits.jobs}};
}

std::uint64_t pick_orientation(const Orientations &all, std::optional<std::uint64_t> index,
                               bool random, const Settings &s)
{
    if (random)
        return splitmix64(s.seed) % all.size();
    const auto i = index.value_or(0);
    if (i >= all.size())
        throw UsageError("orientation index out of range (there are " + std::to_string(all.size()) +
                         ")");
    return i;
}

int emit(const Outcome &out, const Settings &s)
{
    if (s.format == "json") {
        std::cout << out.report.dump() << '\n';
    } else {
        if (!out.graph)
            throw UsageError("--format " + s.format + " is not available for this command");
        const auto &g = out.graph->graph;
        if (s.format == "dot") {
            std::visit([&](const auto &x) { std::cout << write_dot(x, out.graph->labels); }, g);
        } else if (s.format == "graph6") {
            const auto *u = std::get_if<UndirectedGraph>(&g);
            if (!u)
                throw UsageError("graph6 holds undirected graphs only; use digraph6");
            std::cout << write_graph6(*u) << '\n';
        } else {
            const auto *d = std::get_if<OrientedGraph>(&g);
            if (!d)
                throw UsageError("digraph6 is for oriented graphs; use graph6");
            std::cout << write_digraph6(*d) << '\n';
        }
    }
    return out.failed ? exit_failed : exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Oriented colourings, graph products and their target constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    int cap_edges = s.limits.max_edges;
    if (const char *env = std::getenv("ORICHROM_CAP_EDGES")) {
        try {
            cap_edges = std::stoi(env);
        } catch (const std::exception &) {
            std::cerr << "error: ORICHROM_CAP_EDGES must be an integer\n";
            return exit_usage;
        }
    }
    app.add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"graph6", "digraph6", "dot", "json"}));
    app.add_option("--seed", s.seed, "Seed for sampled checks and random orientations");
    app.add_option("--cap-edges", cap_edges, "Largest edge count whose orientations are enumerated")
        ->check(CLI::Range(0, 62));
    app.add_option("--cap-order", s.limits.max_target_order,
                   "Largest target order enumerated by chi-o-plus")
        ->check(CLI::Range(1, 8));
    app.add_option("--cap-vertices", s.limits.max_vertices, "Largest order for the exact solvers")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-construction", s.limits.max_construction_order,
                   "Largest order of a constructed target")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--witness", s.witness, "Include witness maps in the report");
    app.add_flag("--timing", s.timing, "Include wall-clock time in the report");

    std::string graph_spec, left_spec, right_spec, kind_name, which, theorem;
    std::string from_spec, to_spec;
    int max_order = 5, number = 0, m = 1, k = 3, l = 3, samples = 1000;
    std::optional<int> n_opt;
    std::optional<std::uint64_t> orientation, orientation_q;
    bool random_orientation = false, all_theorems = false;

    auto *family = app.add_subcommand("family", "Emit a named graph");
    family->add_option("spec", graph_spec, "Graph spec, e.g. path:4 or circulant:7,1-2-3")
        ->required();

    auto *product_cmd = app.add_subcommand("product", "Product of two graphs");
    product_cmd->add_option("--kind", kind_name, "cartesian|strong|direct|lexicographic")
        ->required()
        ->check(CLI::IsMember({"cartesian", "strong", "direct", "lexicographic"}));
    product_cmd->add_option("--left", left_spec, "Left factor")->required();
    product_cmd->add_option("--right", right_spec, "Right factor")->required();

    auto *chi = app.add_subcommand("chi", "Chromatic number");
    chi->add_option("--graph", graph_spec, "Undirected graph")->required();

    auto *chi_o = app.add_subcommand("chi-o", "Oriented chromatic number");
    chi_o->add_option("--graph", graph_spec, "Oriented graph, or undirected for the max over orientations")
        ->required();

    auto *chi_o_plus_cmd = app.add_subcommand("chi-o-plus", "Upper oriented chromatic number");
    chi_o_plus_cmd->add_option("--graph", graph_spec, "Undirected graph")->required();
    chi_o_plus_cmd->add_option("--max-order", max_order, "Largest target order to try")
        ->check(CLI::PositiveNumber);

    auto *epsilon = app.add_subcommand("epsilon", "Least order of an n-universal tournament");
    epsilon->add_option("n", number, "n")->required()->check(CLI::PositiveNumber);

    auto *moon = app.add_subcommand("moon-bounds", "Bounds on the universal tournament order");
    moon->add_option("n", number, "n")->required()->check(CLI::PositiveNumber);

    auto *hom = app.add_subcommand("hom", "Search for a homomorphism");
    hom->add_option("--from", from_spec, "Source oriented graph")->required();
    hom->add_option("--to", to_spec, "Target oriented graph")->required();

    auto *construct = app.add_subcommand("construct", "Build a target and its homomorphism");
    construct
        ->add_option("--which", which,
                     "bipartite|square|t7|c3-grid|lexico-w|strong-w|cartesian-w|direct-w")
        ->required()
        ->check(CLI::IsMember({"bipartite", "square", "t7", "c3-grid", "lexico-w", "strong-w",
                               "cartesian-w", "direct-w"}));
    construct->add_option("--m", m, "bipartite: size of the first part")->check(CLI::PositiveNumber);
    construct->add_option("--n", n_opt, "bipartite: size of the second part");
    construct->add_option("--k", k, "t7 / c3-grid: first path order")->check(CLI::PositiveNumber);
    construct->add_option("--l", l, "t7 / c3-grid: second path order")->check(CLI::PositiveNumber);
    construct->add_option("--graph", graph_spec, "square: undirected graph");
    construct->add_option("--left", left_spec, "W constructions: left factor");
    construct->add_option("--right", right_spec, "W constructions: right factor");
    construct->add_option("--orientation", orientation, "Orientation index of the input");
    construct->add_option("--orientation-q", orientation_q, "c3-grid: orientation index of the second path");
    construct->add_flag("--random-orientation", random_orientation, "Pick the orientation from --seed");

    auto *verify = app.add_subcommand("verify", "Run acceptance checks");
    auto *theorem_opt = verify->add_option("--theorem", theorem, "Check name")
                            ->check(CLI::IsMember(check_names()));
    verify->add_flag("--all", all_theorems, "Run every check")->excludes(theorem_opt);
    verify->add_option("--k", k, "strong-paths: first path order");
    verify->add_option("--l", l, "strong-paths: second path order");
    verify->add_option("--samples", samples, "strong-lexico-w: random orientations per construction")
        ->check(CLI::PositiveNumber);

    auto *line = app.add_subcommand("line-digraph", "Line digraph of an oriented graph");
    line->add_option("--graph", graph_spec, "Oriented graph")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return exit_usage;
    }
    s.limits.max_edges = cap_edges;
    s.limits.jobs = s.jobs;

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    auto &r = out.report;
    r.caps = caps_json(s);

    try {
        if (*family) {
            r.command = "family";
            r.inputs["spec"] = graph_spec;
            auto g = parse_graph_spec(graph_spec);
            r.values["graph"] = graph_json(g);
            out.graph = GraphOutput{std::move(g), {}};
        } else if (*product_cmd) {
            r.command = "product";
            const auto kind = parse_product_kind(kind_name);
            r.inputs = {{"kind", kind_name}, {"left", left_spec}, {"right", right_spec}};
            auto a = parse_graph_spec(left_spec);
            auto b = parse_graph_spec(right_spec);
            if (a.index() != b.index())
                throw UsageError("factors must both be undirected or both oriented");
            AnyGraph p = std::holds_alternative<UndirectedGraph>(a)
                             ? AnyGraph(product(kind, std::get<UndirectedGraph>(a),
                                                std::get<UndirectedGraph>(b)))
                             : AnyGraph(product(kind, std::get<OrientedGraph>(a),
                                                std::get<OrientedGraph>(b)));
            r.values["graph"] = graph_json(p);
            out.graph = GraphOutput{std::move(p), {}};
        } else if (*chi) {
            r.command = "chi";
            r.inputs["graph"] = graph_spec;
            const auto g = need_undirected(graph_spec);
            const auto c = optimal_proper_coloring(g, s.limits);
            r.values["chi"] = c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
            if (s.witness)
                r.witness = json{{"coloring", map_json(c)}};
        } else if (*chi_o) {
            r.command = "chi-o";
            r.inputs["graph"] = graph_spec;
            auto g = parse_graph_spec(graph_spec);
            if (auto *d = std::get_if<OrientedGraph>(&g)) {
                const auto c = optimal_oriented_coloring(*d, s.limits);
                r.values["chi_o"] = c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
                if (s.witness)
                    r.witness = json{{"coloring", map_json(c)}};
            } else {
                const auto &u = std::get<UndirectedGraph>(g);
                const auto sweep = chi_o_undirected_sweep(u, s.limits);
                r.values["chi_o"] = sweep.value;
                r.values["orientations"] = sweep.orientations;
                r.values["witness_orientation"] = sweep.witness;
                if (s.witness) {
                    const auto d = Orientations(u, s.limits.max_edges)[sweep.witness];
                    r.witness = json{{"orientation", to_json(d)},
                                     {"coloring", map_json(optimal_oriented_coloring(d, s.limits))}};
                }
            }
        } else if (*chi_o_plus_cmd) {
            r.command = "chi-o-plus";
            r.inputs = {{"graph", graph_spec}, {"max_order", max_order}};
            const auto g = need_undirected(graph_spec);
            const auto found = chi_o_plus(g, max_order, s.limits);
            r.values["chi_o_plus"] = found.value ? json(*found.value) : json(nullptr);
            if (!found.value)
                r.values["exceeds"] = max_order;
            r.values["candidates_tested"] = found.candidates_tested;
            if (found.target) {
                r.values["target"] = to_json(*found.target);
                out.graph = GraphOutput{*found.target, {}};
            }
        } else if (*epsilon) {
            r.command = "epsilon";
            r.inputs["n"] = number;
            const auto u = universal_tournament_size(number, s.limits);
            r.values["epsilon"] = u.size;
            r.values["tournament"] = to_json(u.tournament);
            out.graph = GraphOutput{u.tournament, {}};
        } else if (*moon) {
            r.command = "moon-bounds";
            r.inputs["n"] = number;
            const auto b = moon_bounds(number);
            auto surd = [](const SurdValue &v) {
                return json{{"value", v.to_string()},
                            {"numerator", v.numerator},
                            {"denominator", v.denominator},
                            {"times_sqrt2", v.times_sqrt2}};
            };
            r.values["lower"] = surd(b.lower);
            r.values["upper"] = surd(b.upper);
        } else if (*hom) {
            r.command = "hom";
            r.inputs = {{"from", from_spec}, {"to", to_spec}};
            const auto found = find_homomorphism(need_oriented(from_spec), need_oriented(to_spec));
            r.values["exists"] = found.has_value();
            if (found && s.witness)
                r.witness = json{{"map", map_json(*found)}};
        } else if (*construct) {
            r.command = "construct";
            r.inputs["which"] = which;
            std::optional<StructuredTarget> target;
            std::optional<OrientedGraph> source;
            VertexMap map;

            auto oriented_product = [&](ProductKind kind, const UndirectedGraph &g,
                                        const UndirectedGraph &h) {
                const Orientations all(product(kind, g, h), s.limits.max_edges);
                const auto i = pick_orientation(all, orientation, random_orientation, s);
                r.inputs["orientation"] = i;
                return all[i];
            };
            auto factors = [&] {
                if (left_spec.empty() || right_spec.empty())
                    throw UsageError("--left and --right are required for " + which);
                r.inputs["left"] = left_spec;
                r.inputs["right"] = right_spec;
                return std::pair{need_undirected(left_spec), need_undirected(right_spec)};
            };
            auto receiving = [&](const UndirectedGraph &g) {
                const auto found = chi_o_plus(g, s.limits.max_target_order, s.limits);
                if (!found.target)
                    throw CapExceeded("no factor target within --cap-order");
                return *found.target;
            };
            auto colours = [](const VertexMap &c) {
                return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
            };

            if (which == "bipartite") {
                r.inputs["m"] = m;
                target = bipartite_target(m);
                if (n_opt) {
                    r.inputs["n"] = *n_opt;
                    source = bipartite_tight_orientation(m, *n_opt);
                    map = bipartite_hom(*source, m, *n_opt);
                    r.values["chi_o"] = chi_o_oriented(*source, s.limits);
                    r.values["expected_chi_o"] = m + std::min<std::int64_t>(*n_opt, std::int64_t{1} << m);
                }
            } else if (which == "square") {
                if (graph_spec.empty())
                    throw UsageError("--graph is required for square");
                r.inputs["graph"] = graph_spec;
                const auto g = need_undirected(graph_spec);
                const auto sigma = optimal_proper_coloring(square(g), s.limits);
                const Orientations all(g, s.limits.max_edges);
                const auto i = pick_orientation(all, orientation, random_orientation, s);
                r.inputs["orientation"] = i;
                source = all[i];
                const auto c = square_coloring(g, sigma, *source);
                const int kk = colours(sigma);
                r.values["chi_square"] = kk;
                r.values["palette_size"] = square_palette_size(kk);
                r.values["valid_oriented_coloring"] = verify_oriented_coloring(*source, c);
                json labels = json::array();
                for (auto v : c)
                    labels.push_back(square_palette_label(v).to_string());
                r.values["labels"] = labels;
                if (s.witness)
                    r.witness = json{{"coloring", map_json(c)}};
                out.failed = !verify_oriented_coloring(*source, c);
                out.graph = GraphOutput{*source, {}};
                for (auto v : c)
                    out.graph->labels.push_back(square_palette_label(v).to_string());
            } else if (which == "t7") {
                r.inputs["k"] = k;
                r.inputs["l"] = l;
                const std::vector<int> residues{1, 2, 3};
                target = StructuredTarget{circulant_tournament(7, residues), {}};
                for (int i = 0; i < 7; ++i)
                    target->labels.push_back({"", {i}});
                source = product(ProductKind::strong, directed_path(k), directed_path(l));
                map = t7_strong_grid_hom(k, l);
            } else if (which == "c3-grid") {
                r.inputs["k"] = k;
                r.inputs["l"] = l;
                const Orientations ps(path(k), s.limits.max_edges), qs(path(l), s.limits.max_edges);
                const auto i = pick_orientation(ps, orientation, random_orientation, s);
                const auto j = pick_orientation(qs, orientation_q, random_orientation, s);
                r.inputs["orientation"] = i;
                r.inputs["orientation_q"] = j;
                target = StructuredTarget{directed_cycle(3), {}};
                for (int c = 0; c < 3; ++c)
                    target->labels.push_back({"", {c}});
                source = product(ProductKind::cartesian, ps[i], qs[j]);
                map = c3_cartesian_path_hom(ps[i], qs[j]);
            } else if (which == "lexico-w") {
                auto [g, h] = factors();
                LexicoFactorData data{g, h, optimal_proper_coloring(square(g), s.limits),
                                      receiving(h), {}};
                const int kk = colours(data.g_square_coloring);
                target = lexico_upper_target(kk, data.u_target, h.order(), s.limits);
                source = oriented_product(ProductKind::lexicographic, g, h);
                map = lexico_upper_hom(*source, data);
            } else if (which == "strong-w") {
                auto [g, h] = factors();
                StrongFactorData data{g, h, optimal_proper_coloring(g, s.limits),
                                      optimal_proper_coloring(square(h), s.limits),
                                      receiving(g), receiving(h), {}, {}};
                target = strong_upper_target(colours(data.h_square_coloring),
                                             colours(data.g_coloring), data.g_target,
                                             data.h_target, s.limits);
                source = oriented_product(ProductKind::strong, g, h);
                map = strong_upper_hom(*source, data);
            } else if (which == "cartesian-w") {
                auto [g, h] = factors();
                // colour the factor with the smaller chromatic number
                bool swapped = false;
                if (chromatic_number(g, s.limits) < chromatic_number(h, s.limits)) {
                    std::swap(g, h);
                    swapped = true;
                }
                r.values["factors_swapped"] = swapped;
                CartesianFactorData data{g, h, optimal_proper_coloring(h, s.limits),
                                         receiving(g), receiving(h), {}, {}};
                target = cartesian_upper_target(colours(data.h_coloring), data.g_target,
                                                data.h_target, s.limits);
                source = oriented_product(ProductKind::cartesian, g, h);
                map = cartesian_upper_hom(*source, data);
            } else if (which == "direct-w") {
                auto [g, h] = factors();
                DirectFactorData data{g, h, optimal_proper_coloring(square(g), s.limits),
                                      optimal_proper_coloring(square(h), s.limits)};
                const int kk = colours(data.g_square_coloring);
                const int ll = colours(data.h_square_coloring);
                r.values["k"] = kk;
                r.values["l"] = ll;
                target = direct_upper_target(kk, ll, s.limits);
                source = oriented_product(ProductKind::direct, g, h);
                map = direct_upper_hom(*source, data);
            }

            if (target) {
                r.values["target_order"] = target->order();
                r.values["target"] = to_json(target->graph);
                out.graph = GraphOutput{target->graph, label_strings(*target)};
                if (source) {
                    const bool ok = verify_homomorphism(*source, target->graph, map);
                    r.values["verified"] = ok;
                    out.failed = !ok;
                    if (s.witness) {
                        json images = json::array();
                        for (auto v : map)
                            images.push_back(target->labels[v].to_string());
                        r.witness = json{{"map", map_json(map)}, {"labels", images}};
                    }
                }
            }
        } else if (*verify) {
            r.command = "verify";
            if (!all_theorems && theorem.empty())
                throw UsageError("verify needs --theorem NAME or --all");
            VerifyOptions vo;
            vo.seed = s.seed;
            vo.samples = samples;
            vo.k = k;
            vo.l = l;
            vo.limits = s.limits;
            std::vector<std::string> names =
                all_theorems ? check_names() : std::vector<std::string>{theorem};
            r.inputs["checks"] = names;
            r.inputs["seed"] = s.seed;
            json results = json::array();
            for (const auto &name : names) {
                const auto c = run_check(name, vo);
                json entry{{"criterion", c.criterion},
                           {"name", c.name},
                           {"passed", c.passed()},
                           {"correct", c.correct},
                           {"summary", c.summary},
                           {"details", c.details}};
                if (s.timing) {
                    entry["elapsed_s"] = c.elapsed_s;
                    entry["budget_s"] = c.budget_s;
                }
                results.push_back(entry);
                out.failed = out.failed || !c.passed();
            }
            r.values["checks"] = results;
            r.values["all_passed"] = !out.failed;
        } else if (*line) {
            r.command = "line-digraph";
            r.inputs["graph"] = graph_spec;
            const auto d = need_oriented(graph_spec);
            const auto ld = line_digraph(d);
            r.values["graph"] = to_json(ld);
            std::vector<std::string> labels;
            for (const auto &a : d.arcs())
                labels.push_back("(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
            out.graph = GraphOutput{ld, labels};
        }

        if (s.timing)
            r.elapsed_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
        return emit(out, s);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapExceeded &e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return exit_usage;
    } catch (const PremiseViolation &e) {
        std::cerr << "construction premise failed: " << e.what() << '\n';
        return exit_failed;
    } catch (const FormatError &e) {
        std::cerr << "format error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return exit_usage;
    }
}
