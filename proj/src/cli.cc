#include <fanforge/cli.hh>
#include <fanforge/errors.hh>
#include <fanforge/facts.hh>
#include <fanforge/fan.hh>
#include <fanforge/graph6.hh>
#include <fanforge/recolor.hh>
#include <fanforge/scan.hh>
#include <fanforge/solver.hh>
#include <fanforge/theorems.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace fanforge;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    class UsageError : public Error
    {
    public:
        using Error::Error;
    };

    auto default_budget() -> long long
    {
        if (auto env = std::getenv("FANFORGE_BUDGET")) {
            try {
                return std::stoll(env);
            }
            catch (const std::exception &) {
                throw UsageError("FANFORGE_BUDGET is not an integer: " + string(env));
            }
        }
        return 100'000;
    }

    struct Config
    {
        vector<string> graphs;
        string input;
        string output;
        long long budget = 0;
        long long solver_budget = default_node_budget;
        string format = "json";
        std::uint64_t seed = 0;
        vector<string> checks;
        int workers = 1;
        string mode = "exhaustive";
        bool force = false;
        bool timing = false;
        string edge;
        int center = -1;
        int tau = 0;
        int item = 0;
        long long witness_budget = 3'000;
        long long p2_budget = 20'000;
        int colorings = 10;
    };

    struct Numbered
    {
        long long line;
        string text;
    };

    // Positional graph6 strings, else the lines of --input ("-" for stdin),
    // else stdin.
    auto graph_lines(const Config & c, std::istream & in) -> vector<Numbered>
    {
        vector<Numbered> result;
        if (! c.graphs.empty()) {
            for (std::size_t i = 0; i < c.graphs.size(); ++i)
                result.push_back({static_cast<long long>(i + 1), c.graphs[i]});
            return result;
        }
        std::ifstream file;
        std::istream * source = &in;
        if (! c.input.empty() && c.input != "-") {
            file.open(c.input);
            if (! file)
                throw UsageError("cannot open " + c.input);
            source = &file;
        }
        string text;
        long long line = 0;
        while (std::getline(*source, text)) {
            ++line;
            if (! is_graph6_blank(text))
                result.push_back({line, text});
        }
        return result;
    }

    auto solver_options(const Config & c) -> SolverOptions
    {
        SolverOptions s;
        s.budget = c.solver_budget;
        return s;
    }

    auto search_mode(const Config & c) -> SearchMode
    {
        return c.mode == "reachability" ? SearchMode::reachability : SearchMode::exhaustive;
    }

    auto classify_json(const SimpleGraph & g, const GraphFacts & facts) -> json
    {
        auto & v = facts.criticality.verdict;
        json j{{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"delta", facts.delta()},
            {"exact", v.exact}, {"overfull", is_overfull(g)}, {"just_overfull", is_just_overfull(g)},
            {"core_min_degree", facts.profile.core_min_degree},
            {"core_max_degree", facts.profile.core_max_degree}, {"core_acyclic_shortcut", v.core_acyclic},
            {"decided_by_overfull", v.decided_by_overfull}, {"nodes", v.nodes},
            {"delta_critical", to_string(facts.criticality.delta_critical)}};
        j["overfull_deficiency"] = g.order() % 2 ? json(overfull_deficiency(g)) : json(nullptr);
        j["chi_prime"] = v.exact ? json(v.chi_prime) : json(nullptr);
        j["class"] = v.exact ? json(v.edge_class == EdgeClass::one ? 1 : 2) : json(nullptr);
        j["witness"] = v.witness ? json(serialize(*v.witness)) : json(nullptr);
        return j;
    }

    auto cmd_classify(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        int code = 0;
        bool tsv = c.format == "tsv";
        if (tsv)
            out << "graph6\tn\tm\tdelta\tchi_prime\tclass\toverfull\tjust_overfull\tcore_min\tcore_max\tcore_acyclic\tdelta_critical\n";
        err << std::left << std::setw(16) << "graph6" << " n   m    delta chi' class overfull just core-acyclic\n";
        for (auto & [line, text] : graph_lines(c, in)) {
            try {
                auto g = share(from_graph6(text));
                auto facts = compute_facts(g, solver_options(c));
                auto j = classify_json(*g, facts);
                auto field = [&](const char * k) { return j[k].is_null() ? string("?") : j[k].dump(); };
                if (tsv)
                    out << j["graph6"].get<string>() << '\t' << j["n"] << '\t' << j["m"] << '\t' << j["delta"] << '\t'
                        << field("chi_prime") << '\t' << field("class") << '\t' << j["overfull"] << '\t'
                        << j["just_overfull"] << '\t' << j["core_min_degree"] << '\t' << j["core_max_degree"] << '\t'
                        << j["core_acyclic_shortcut"] << '\t' << j["delta_critical"].get<string>() << '\n';
                else
                    out << j.dump() << '\n';
                err << std::left << std::setw(16) << j["graph6"].get<string>() << ' ' << std::setw(3) << g->order() << ' '
                    << std::setw(4) << g->size() << ' ' << std::setw(5) << facts.delta() << ' ' << std::setw(4)
                    << field("chi_prime") << ' ' << std::setw(5) << field("class") << ' ' << std::setw(8)
                    << (is_overfull(*g) ? "yes" : "no") << ' ' << std::setw(4) << (is_just_overfull(*g) ? "yes" : "no")
                    << ' ' << (facts.criticality.verdict.core_acyclic ? "yes" : "no") << '\n';
                if (! facts.exact())
                    code = std::max(code, 2);
            }
            catch (const ParseError & e) {
                err << "line " << line << ": parse error: " << e.what() << '\n';
                if (! tsv)
                    out << json{{"line", line}, {"graph6", text}, {"error", string("parse error: ") + e.what()}}.dump() << '\n';
                code = 3;
            }
        }
        return code;
    }

    auto scan_options(const Config & c) -> ScanOptions
    {
        ScanOptions s;
        s.checks = c.checks;
        if (s.checks.size() == 1 && s.checks[0] == "all")
            s.checks.clear();
        validate_checks(s.checks);
        s.solver = solver_options(c);
        s.suite.mode = search_mode(c);
        s.suite.budget = c.budget;
        s.suite.seed = c.seed;
        s.suite.colorings = c.colorings;
        s.suite.p2_budget = c.p2_budget;
        s.suite.witness_budget = c.witness_budget;
        s.workers = c.workers;
        s.timing = c.timing;
        return s;
    }

    auto print_summary(const ScanSummary & summary, std::ostream & err) -> void
    {
        std::map<string, std::map<string, long long>> table = summary.counts;
        const vector<string> columns{"PASS", "CONDITIONAL", "INAPPLICABLE", "UNKNOWN", "FAIL"};
        err << std::left << std::setw(22) << "check";
        for (auto & col : columns)
            err << std::setw(13) << col;
        err << '\n';
        for (auto & [check, by_status] : table) {
            err << std::setw(22) << check;
            for (auto & col : columns)
                err << std::setw(13) << (by_status.count(col) ? by_status.at(col) : 0);
            err << '\n';
        }
        err << "graphs: " << summary.graphs << ", errors: " << summary.errors << '\n';
    }

    auto cmd_verify(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto options = scan_options(c);
        ScanSummary summary;
        for (auto & [line, text] : graph_lines(c, in)) {
            auto report = scan_line(text, line, options);
            ++summary.graphs;
            if (report.contains("error")) {
                ++summary.errors;
                out << report.dump() << '\n';
                continue;
            }
            for (auto & v : report["verdicts"]) {
                ++summary.counts[v["check"].get<string>()][v["status"].get<string>()];
                json row{{"line", line}, {"graph6", report["graph6"]}};
                row.update(v);
                out << row.dump() << '\n';
            }
        }
        print_summary(summary, err);
        return summary.exit_code();
    }

    auto cmd_scan(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto options = scan_options(c);
        std::ifstream file;
        std::istream * source = &in;
        if (! c.input.empty() && c.input != "-") {
            file.open(c.input);
            if (! file)
                throw UsageError("cannot open " + c.input);
            source = &file;
        }
        std::ostringstream discard;
        auto summary = scan_stream(*source, c.format == "tsv" ? static_cast<std::ostream &>(discard) : out, options);
        if (c.format == "tsv")
            out << summary_tsv(summary);
        print_summary(summary, err);
        return summary.exit_code();
    }

    struct FanInput
    {
        GraphPtr graph;
        int edge;
        int center;
    };

    auto parse_edge(const SimpleGraph & g, const string & spec) -> std::pair<int, int>
    {
        auto dash = spec.find('-');
        if (dash == string::npos)
            throw UsageError("edge must be given as u-v: " + spec);
        int u, v;
        try {
            std::size_t used_u, used_v;
            u = std::stoi(spec.substr(0, dash), &used_u);
            v = std::stoi(spec.substr(dash + 1), &used_v);
            if (used_u != dash || used_v != spec.size() - dash - 1)
                throw std::invalid_argument(spec);
        }
        catch (const std::exception &) {
            throw UsageError("edge must be given as u-v: " + spec);
        }
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.edge_between(u, v))
            throw UsageError("no edge " + spec + " in the graph");
        return {u, v};
    }

    auto fan_input(const Config & c, std::istream & in) -> FanInput
    {
        auto lines = graph_lines(c, in);
        if (lines.size() != 1)
            throw UsageError("expected exactly one graph");
        auto g = share(from_graph6(lines.front().text));
        if (c.edge.empty())
            throw UsageError("--edge u-v is required");
        auto [u, v] = parse_edge(*g, c.edge);
        int center = c.center < 0 ? u : c.center;
        if (center != u && center != v)
            throw UsageError("--center must be an endpoint of the edge");
        if (search_mode(c) == SearchMode::exhaustive && g->order() >= 10 && ! c.force)
            throw UsageError("exhaustive fan search on n = " + std::to_string(g->order()) +
                " may not finish; use --mode reachability, lower --budget (now " + std::to_string(c.budget) +
                ") or pass --force");
        return {g, *g->edge_between(u, v), center};
    }

    // Seeded start for the reachability walk: a coloring drawn from the
    // first thousand in enumeration order. Seed 0 lets the solver choose.
    auto start_coloring(const FanInput & f, std::uint64_t seed) -> std::optional<PartialEdgeColoring>
    {
        if (seed == 0)
            return std::nullopt;
        std::mt19937_64 rng(seed);
        std::optional<PartialEdgeColoring> chosen;
        long long seen = 0;
        EnumerationOptions options;
        options.limit = 1000;
        for_each_coloring(f.graph, f.edge, f.graph->max_degree(), options, [&](const PartialEdgeColoring & phi) {
            if (std::uniform_int_distribution<long long>(0, seen++)(rng) == 0)
                chosen = phi;
            return true;
        });
        return chosen;
    }

    auto fan_json(const Multifan & f) -> json
    {
        json missing = json::array();
        for (auto & m : f.missing)
            missing.push_back(m.to_vector());
        return json{{"center", f.center}, {"sequence", f.sequence}, {"edge_colors", f.edge_colors}, {"missing", missing},
            {"status", to_string(f.status)}};
    }

    auto tau_json(const PartialEdgeColoring & phi, const Multifan & f, int tau) -> json
    {
        json j{{"tau", tau}};
        try {
            auto s = build_tau_sequence(phi, f, tau);
            j["vertices"] = s.vertices;
            j["type"] = to_string(s.type);
            if (s.type == TauType::b)
                j["terminal_color"] = s.terminal_color;
            if (s.type == TauType::c)
                j["terminal_index"] = s.terminal_index;
        }
        catch (const Error & e) {
            j["error"] = e.what();
        }
        return j;
    }

    struct Explored
    {
        json report;
        std::optional<NormalizedFan> typical;
        std::shared_ptr<const GraphFacts> facts;
    };

    auto explore_fan(const Config & c, const FanInput & input, std::ostream & err) -> Explored
    {
        auto & g = *input.graph;
        auto facts = std::make_shared<const GraphFacts>(compute_facts(input.graph, solver_options(c)));
        if (! facts->class_two())
            err << "warning: graph is not known to be class two; fan lemmas will be INAPPLICABLE\n";
        auto best = search_maximum_multifan(input.graph, input.edge, input.center, search_mode(c), c.budget,
            search_mode(c) == SearchMode::reachability ? start_coloring(input, c.seed) : std::nullopt);

        json report{{"graph6", to_graph6(g)}, {"edge", {g.edge(input.edge).u, g.edge(input.edge).v}},
            {"center", input.center}, {"mode", c.mode}, {"budget", c.budget}, {"seed", c.seed},
            {"edge_critical", to_string(facts->edge_critical(input.edge))}};
        report["class"] = facts->exact() ? json(facts->class_two() ? 2 : 1) : json(nullptr);
        report["maximum"] = {{"status", to_string(best.status)}, {"examined", best.examined},
            {"upper_bound", best.upper_bound}, {"vertex_count", best.fan.vertex_count()}};
        report["coloring"] = serialize(best.coloring);
        report["fan"] = fan_json(best.fan);

        Explored result{report, std::nullopt, facts};
        try {
            result.typical = normalize_typical(best.coloring, best.fan);
            result.typical->fan.status = best.status;
        }
        catch (const PreconditionError & e) {
            result.report["typical"] = nullptr;
            result.report["typical_error"] = e.what();
            result.report["tau_sequences"] = json::array();
            result.report["rs1_linkage"] = to_json(Verdict::inapplicable("rs1-linkage", "no typical form"));
            return result;
        }
        auto & n = *result.typical;
        auto & t = *n.fan.typical;
        result.report["typical"] = {{"coloring", serialize(n.coloring)}, {"mapping", n.mapping},
            {"fan", fan_json(n.fan)}, {"alpha", t.alpha}, {"beta", t.beta}, {"two_inducing", t.two_inducing},
            {"delta_inducing", t.delta_inducing}};
        json inducing = json::array();
        try {
            for (auto & entry : inducing_map(n.coloring, n.fan))
                inducing.push_back(
                    {{"color", entry.color}, {"vertex", entry.vertex}, {"root", entry.root}, {"sequence", entry.sequence}});
        }
        catch (const Error &) {
        }
        result.report["inducing"] = inducing;
        json taus = json::array();
        for (int tau : eligible_taus(n.coloring, n.fan))
            taus.push_back(tau_json(n.coloring, n.fan, tau));
        result.report["tau_sequences"] = taus;
        result.report["rs1_linkage"] = to_json(verify_rs1_linkage(*facts, n.coloring, n.fan));
        return result;
    }

    auto cmd_fan(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto input = fan_input(c, in);
        auto explored = explore_fan(c, input, err);
        out << explored.report.dump() << '\n';
        auto & r = explored.report;
        err << "fan at " << input.center << ": " << r["maximum"]["vertex_count"] << " vertices ("
            << r["maximum"]["status"].get<string>() << "), " << r["tau_sequences"].size() << " tau-sequence(s), rs1-linkage "
            << r["rs1_linkage"]["status"].get<string>() << '\n';
        return r["rs1_linkage"]["status"] == "FAIL" ? 1 : 0;
    }

    auto cmd_tau(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto input = fan_input(c, in);
        auto explored = explore_fan(c, input, err);
        auto & report = explored.report;
        json witnesses = json::array();
        int code = 0;
        if (explored.typical) {
            auto & n = *explored.typical;
            report["tau_sequence_verdict"] = to_json(verify_tau_sequences(*explored.facts, n.coloring, n.fan));
            WitnessOptions wo;
            wo.search_budget = c.witness_budget;
            for (auto & inst : tau_item_instances(n.coloring, n.fan)) {
                if ((c.tau && inst.tau != c.tau) || (c.item && inst.item != c.item))
                    continue;
                auto w = witness_tau_item(*explored.facts, n.coloring, n.fan, inst.item, inst.x, inst.tau, wo);
                json j{{"item", inst.item}, {"x", inst.x}, {"tau", inst.tau}, {"status", to_string(w.status)},
                    {"method", w.method}, {"detail", w.detail}, {"transcript", to_json(w.transcript)}};
                j["coloring"] = w.coloring ? json(serialize(*w.coloring)) : json(nullptr);
                witnesses.push_back(j);
                if (w.status == WitnessStatus::fail)
                    code = 1;
                else if (w.status == WitnessStatus::unknown && code == 0)
                    code = 2;
            }
        }
        report["witnesses"] = witnesses;
        out << report.dump() << '\n';
        std::map<string, int> counts;
        for (auto & w : witnesses)
            ++counts[w["status"].get<string>()];
        err << witnesses.size() << " tau-item instance(s)";
        for (auto & [status, count] : counts)
            err << ", " << status << " " << count;
        err << '\n';
        return code;
    }

    auto add_common(CLI::App * sub, Config & c, bool graphs) -> void
    {
        if (graphs)
            sub->add_option("graph", c.graphs, "graph6 strings (default: --input or stdin)");
        sub->add_option("--input", c.input, "file of graph6 lines, - for stdin");
        sub->add_option("--output", c.output, "write machine output here instead of stdout");
        sub->add_option("--budget", c.budget, "search budget for fans and coloring pools (env FANFORGE_BUDGET)");
        sub->add_option("--solver-budget", c.solver_budget, "node budget of the exact solver");
        sub->add_option("--seed", c.seed, "seed for sampled colorings");
    }
}

auto fanforge::run_cli(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    Config c;
    CLI::App app{"Edge-coloring fan and recoloring verifier"};
    app.require_subcommand(1);

    auto classify = app.add_subcommand("classify", "chromatic index, class and overfullness");
    add_common(classify, c, true);
    classify->add_option("--format", c.format)->check(CLI::IsMember({"json", "tsv"}));

    auto verify = app.add_subcommand("verify", "run checks, one JSON line per verdict");
    add_common(verify, c, true);
    verify->add_option("--checks", c.checks, "comma separated check names or all")->delimiter(',')->allow_extra_args(false);
    verify->add_option("--mode", c.mode)->check(CLI::IsMember({"exhaustive", "reachability"}));
    verify->add_option("--colorings", c.colorings, "colorings sampled per critical edge");
    verify->add_option("--p2-budget", c.p2_budget);
    verify->add_option("--witness-budget", c.witness_budget);

    auto fan = app.add_subcommand("fan", "maximum multifan, typical form and tau-sequences at an edge");
    add_common(fan, c, true);
    fan->add_option("--edge", c.edge, "uncolored edge as u-v")->required();
    fan->add_option("--center", c.center, "fan center (default u)");
    fan->add_option("--mode", c.mode)->check(CLI::IsMember({"exhaustive", "reachability"}));
    fan->add_flag("--force", c.force, "allow exhaustive search on 10 or more vertices");

    auto tau = app.add_subcommand("tau", "tau-sequences and recoloring witnesses at an edge");
    add_common(tau, c, true);
    tau->add_option("--edge", c.edge, "uncolored edge as u-v")->required();
    tau->add_option("--center", c.center, "fan center (default u)");
    tau->add_option("--mode", c.mode)->check(CLI::IsMember({"exhaustive", "reachability"}));
    tau->add_flag("--force", c.force, "allow exhaustive search on 10 or more vertices");
    tau->add_option("--tau", c.tau, "only this tau");
    tau->add_option("--item", c.item, "only this item (1-7)")->check(CLI::Range(1, 7));
    tau->add_option("--witness-budget", c.witness_budget);

    auto scan = app.add_subcommand("scan", "run checks over a graph6 stream");
    add_common(scan, c, false);
    scan->add_option("--checks", c.checks, "comma separated check names or all")->delimiter(',')->allow_extra_args(false);
    scan->add_option("--workers", c.workers)->check(CLI::PositiveNumber);
    scan->add_option("--mode", c.mode)->check(CLI::IsMember({"exhaustive", "reachability"}));
    scan->add_option("--format", c.format, "json: report lines; tsv: summary table")->check(CLI::IsMember({"json", "tsv"}));
    scan->add_flag("--timing", c.timing, "add per-graph seconds to the report");
    scan->add_option("--colorings", c.colorings, "colorings sampled per critical edge");
    scan->add_option("--p2-budget", c.p2_budget);
    scan->add_option("--witness-budget", c.witness_budget);

    try {
        c.budget = default_budget();
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }

    try {
        std::ofstream file;
        std::ostream * sink = &out;
        if (! c.output.empty()) {
            file.open(c.output);
            if (! file)
                throw UsageError("cannot write " + c.output);
            sink = &file;
        }
        if (*classify)
            return cmd_classify(c, in, *sink, err);
        if (*verify)
            return cmd_verify(c, in, *sink, err);
        if (*fan)
            return cmd_fan(c, in, *sink, err);
        if (*tau)
            return cmd_tau(c, in, *sink, err);
        return cmd_scan(c, in, *sink, err);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}
