// cicwb: command-line workbench for cyclic interval edge colorings.
// JSON on stdout, diagnostics on stderr. Exit codes: 0 ok, 1 domain error, 2 usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cic/bipartite.hpp"
#include "cic/errors.hpp"
#include "cic/generators.hpp"
#include "cic/io.hpp"
#include "cic/multipartite.hpp"
#include "cic/obstructions.hpp"
#include "cic/outerplanar.hpp"
#include "cic/solver.hpp"

using namespace cic;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document load(const std::string& path) {
    return parse_document(read_input(path));
}

Multigraph need_graph(const Document& doc) {
    if (!doc.graph) throw FormatError("input carries no graph");
    return *doc.graph;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("CIC_SOLVER_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("CIC_SOLVER_BUDGET is not a number");
        }
    }
    return kDefaultBudget;
}

json outcome_json(int t, const SolveOutcome& o) {
    return {{"t", t}, {"status", to_string(o.status)}, {"nodes", o.stats.nodes}};
}

ColoredResult color_with(const std::string& method, const Multigraph& g, std::optional<int> t_max, std::uint64_t budget) {
    if (method == "auto") {
        if (bipartition(g)) return auto_color(g, {t_max, budget});
        // The bipartite dispatcher does not apply; try the other classes before searching.
        if (recognize_complete_multipartite(g)) return color_multipartite_graph(g);
        if (g.is_simple() && g.max_degree() <= 4 && is_connected(g)) {
            try {
                return color_with("outerplanar", g, t_max, budget);
            } catch (const NotOuterplanar&) {
            }
        }
        if (!t_max && !default_wc_bound(g)) t_max = g.max_degree() + 4;
        return color_with("exact", g, t_max, budget);
    }
    if (method == "even-delta") return color_even_delta(g);
    if (method == "odd-delta") return color_odd_delta(g);
    if (method == "eulerian8") return color_eulerian8(g);
    if (method == "biregular") return color_biregular(g);
    if (method == "multipartite") return color_multipartite_graph(g);
    if (method == "outerplanar") {
        OuterplanarStats stats;
        ColoredResult r = color_outerplanar(g, &stats);
        for (const auto& d : stats.diagnostics) std::cerr << "outerplanar: " << d << '\n';
        if (stats.composition_fallback) std::cerr << "outerplanar: composed by whole-graph search\n";
        return r;
    }
    if (method == "exact") {
        if (g.has_loops()) throw PreconditionError("the exact solver does not accept loops");
        WcResult wc = wc_search(g, t_max, budget);
        if (!wc.value) {
            throw DomainError(wc.inconclusive ? "no coloring found within the budget" : "no cyclic interval coloring up to t_max");
        }
        const SolveOutcome& o = wc.outcomes[static_cast<std::size_t>(*wc.value - wc.first_t)];
        return {*o.coloring, *wc.value, Method::Exact};
    }
    throw UsageError("unknown method: " + method);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic interval edge coloring workbench"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph: gen <family> [params...]");
    std::vector<std::string> gen_args;
    std::uint64_t seed = 0;
    bool simple = false;
    gen->add_option("args", gen_args, "family followed by integer parameters; 'subdivision <family> ...' nests")->required();
    gen->add_option("--seed", seed, "64-bit seed for random families");
    gen->add_flag("--simple", simple, "reject parallel edges (biregular)");

    // color
    auto* color = app.add_subcommand("color", "Color a graph");
    std::string graph_path, coloring_path, method = "auto";
    std::optional<int> t_max;
    std::optional<std::uint64_t> budget;
    color->add_option("--graph", graph_path, "graph JSON (stdin when omitted)");
    color->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "even-delta", "odd-delta", "eulerian8", "biregular", "multipartite", "outerplanar", "exact"}));
    color->add_option("--tmax", t_max);
    color->add_option("--budget", budget);

    auto* verify = app.add_subcommand("verify", "Check a coloring");
    verify->add_option("--graph", graph_path, "graph JSON, may also carry the coloring (stdin when omitted)");
    verify->add_option("--coloring", coloring_path, "coloring JSON");

    auto* wc = app.add_subcommand("wc", "Smallest t with a cyclic interval t-coloring");
    wc->add_option("--graph", graph_path);
    wc->add_option("--tmax", t_max);
    wc->add_option("--budget", budget);

    auto* solve_cmd = app.add_subcommand("solve", "Exact search at one t");
    int solve_t = 0;
    bool interval_only = false;
    solve_cmd->add_option("--graph", graph_path);
    solve_cmd->add_option("--t", solve_t)->required();
    solve_cmd->add_option("--budget", budget);
    solve_cmd->add_flag("--interval", interval_only, "search plain interval colorings");

    auto* obstruct = app.add_subcommand("obstruct", "List firing obstructions");
    obstruct->add_option("--graph", graph_path);

    auto* dot = app.add_subcommand("export-dot", "Graphviz output");
    dot->add_option("--graph", graph_path);
    dot->add_option("--coloring", coloring_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        const std::uint64_t search_budget = budget.value_or(default_budget());
        if (gen->parsed()) {
            GeneratorSpec spec;
            GeneratorSpec* cur = &spec;
            std::size_t i = 0;
            while (true) {
                if (i >= gen_args.size()) throw UsageError("missing family");
                cur->family = gen_args[i++];
                cur->seed = seed;
                cur->simple = simple;
                if (cur->family != "subdivision") break;
                cur->inner = std::make_shared<GeneratorSpec>();
                cur = cur->inner.get();
            }
            for (; i < gen_args.size(); ++i) {
                try {
                    cur->params.push_back(std::stoi(gen_args[i]));
                } catch (const std::exception&) {
                    throw UsageError("parameter is not an integer: " + gen_args[i]);
                }
            }
            Document doc;
            doc.graph = generate(spec);
            json meta = {{"family", gen_args[0]}, {"params", json::array()}};
            for (std::size_t k = 1; k < gen_args.size(); ++k) meta["params"].push_back(gen_args[k]);
            if (uses_seed(spec)) {
                meta["seed"] = seed;
                meta["rng"] = Rng::kAlgorithm;
            }
            if (cur->family == "shannon_triangle" && cur == &spec) {
                doc.coloring = shannon_coloring(spec.params.at(0));
                doc.method = "shannon";
            }
            doc.meta = meta.dump();
            std::cout << document_to_json(doc) << '\n';
            return 0;
        }
        if (color->parsed()) {
            const Multigraph g = need_graph(load(graph_path));
            ColoredResult r = color_with(method, g, t_max, search_budget);
            Document out;
            out.graph = g;
            out.coloring = r.coloring;
            out.method = to_string(r.method);
            std::cout << document_to_json(out) << '\n';
            return 0;
        }
        if (verify->parsed()) {
            Document doc = load(graph_path);
            const Multigraph g = need_graph(doc);
            if (!coloring_path.empty()) doc.coloring = coloring_from_json(read_input(coloring_path));
            if (!doc.coloring) throw FormatError("no coloring given");
            if (static_cast<int>(doc.coloring->size()) != g.edge_count())
                throw FormatError("coloring length does not match the edge count");
            const VerificationReport rep = is_cyclic_interval(g, *doc.coloring);
            json out = {{"t", doc.coloring->t()},
                        {"proper", rep.proper},
                        {"interval_ok", rep.interval_ok},
                        {"cyclic_ok", rep.cyclic_ok},
                        {"violations", json::array()}};
            for (const auto& v : rep.violations)
                out["violations"].push_back({{"vertex", v.vertex}, {"kind", std::string(to_string(v.kind))}});
            std::cout << out.dump() << '\n';
            return rep.cyclic_ok ? 0 : 1;
        }
        if (wc->parsed()) {
            const Multigraph g = need_graph(load(graph_path));
            if (g.has_loops()) throw PreconditionError("the exact solver does not accept loops");
            if (!t_max && !default_wc_bound(g)) throw UsageError("--tmax is required unless the graph is simple and triangle-free");
            const WcResult r = wc_search(g, t_max, search_budget);
            json out = {{"wc", r.value ? json(*r.value) : json(nullptr)}, {"inconclusive", r.inconclusive}, {"outcomes", json::array()}};
            for (std::size_t k = 0; k < r.outcomes.size(); ++k)
                out["outcomes"].push_back(outcome_json(r.first_t + static_cast<int>(k), r.outcomes[k]));
            std::cout << out.dump() << '\n';
            return r.value ? 0 : 1;
        }
        if (solve_cmd->parsed()) {
            const Multigraph g = need_graph(load(graph_path));
            if (g.has_loops()) throw PreconditionError("the exact solver does not accept loops");
            const SolveOutcome o = interval_only ? solve_interval(g, solve_t, search_budget) : solve(g, solve_t, search_budget);
            json out = outcome_json(solve_t, o);
            if (o.coloring) out["colors"] = o.coloring->colors();
            std::cout << out.dump() << '\n';
            if (o.status == SolveStatus::Unknown) std::cerr << "budget exhausted after " << o.stats.nodes << " nodes\n";
            return o.status == SolveStatus::Found ? 0 : 1;
        }
        if (obstruct->parsed()) {
            const Multigraph g = need_graph(load(graph_path));
            json out = {{"obstructions", json::array()}};
            for (const auto& r : all_obstructions(g)) {
                json item = {{"kind", r.kind == ObstructionKind::Divisibility ? "Divisibility"
                                      : r.kind == ObstructionKind::EvenT      ? "EvenT"
                                                                               : "WindowSpan"},
                             {"description", describe(r)}};
                if (r.kind == ObstructionKind::WindowSpan) {
                    item["root"] = r.root;
                    item["span"] = r.span;
                    item["excludes"] = "all";
                } else {
                    item["divisor"] = r.divisor;
                    item["excludes"] = "multiples of " + std::to_string(r.divisor);
                }
                out["obstructions"].push_back(item);
            }
            std::cout << out.dump() << '\n';
            return 0;
        }
        if (dot->parsed()) {
            Document doc = load(graph_path);
            const Multigraph g = need_graph(doc);
            if (!coloring_path.empty()) doc.coloring = coloring_from_json(read_input(coloring_path));
            std::cout << export_dot(g, doc.coloring);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const NoMethodApplies& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (e.obstruction_hint) std::cerr << "obstruction: " << *e.obstruction_hint << '\n';
        return 1;
    } catch (const DefectError& e) {
        std::cerr << "internal defect: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
