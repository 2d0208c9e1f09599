// Acceptance run: one PASS or FAIL line per criterion, exit 1 if any fails.

#include <fanforge/coloring.hh>
#include <fanforge/facts.hh>
#include <fanforge/graph6.hh>
#include <fanforge/recolor.hh>
#include <fanforge/scan.hh>
#include <fanforge/solver.hh>
#include <fanforge/suite.hh>
#include <fanforge/theorems.hh>

#include "support/fixtures.hh"
#include "support/instances.hh"
#include "support/oracles.hh"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace fanforge;

using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        bool pass = true;
        string detail;

        auto require(bool condition, const string & what) -> void
        {
            if (! condition && pass) {
                pass = false;
                detail = what;
            }
        }
    };

    auto graph_lines(const string & name) -> vector<string>
    {
        vector<string> result;
        for (auto & line : oracle::read_lines(fixture::data_path(name)))
            if (! is_graph6_blank(line))
                result.push_back(line);
        return result;
    }

    auto vizing_sweep() -> Outcome
    {
        Outcome o;
        auto lines = graph_lines("connected_le7.g6");
        int class_two = 0;
        for (auto & line : lines) {
            auto g = share(from_graph6(line));
            auto v = chromatic_index(g);
            int delta = g->max_degree();
            o.require(v.exact, line + ": undecided");
            o.require(v.chi_prime == delta || v.chi_prime == delta + 1, line + ": chromatic index out of range");
            if (g->size() > 0) {
                o.require(v.witness && validate(*v.witness) && ! v.witness->uncolored() && v.witness->k() == v.chi_prime,
                    line + ": witness does not validate");
            }
            class_two += v.chi_prime == delta + 1;
        }
        o.require(lines.size() == 996, "fixture holds " + std::to_string(lines.size()) + " graphs");
        if (o.pass)
            o.detail = std::to_string(lines.size()) + " graphs, " + std::to_string(class_two) + " class two";
        return o;
    }

    auto known_classes() -> Outcome
    {
        Outcome o;
        auto chi = [](SimpleGraph g) { return chromatic_index(share(std::move(g))).chi_prime; };
        for (int k = 1; k <= 4; ++k)
            o.require(chi(cycle(2 * k + 1)) == 3, "odd cycle C" + std::to_string(2 * k + 1));
        for (int k = 1; k <= 3; ++k)
            o.require(chi(complete(2 * k + 1)) == 2 * k + 1, "complete K" + std::to_string(2 * k + 1));
        o.require(chi(petersen()) == 4, "Petersen");
        auto pv = share(delete_vertex(petersen(), 0));
        auto report = analyse_criticality(pv);
        o.require(report.verdict.exact && report.verdict.edge_class == EdgeClass::two && report.verdict.delta == 3,
            "Petersen-v class");
        o.require(report.delta_critical == Tri::yes, "Petersen-v criticality");
        if (o.pass)
            o.detail = "odd cycles, odd cliques, Petersen, Petersen-v";
        return o;
    }

    auto overfull_arithmetic() -> Outcome
    {
        Outcome o;
        auto c5 = cycle(5), k5 = complete(5), pv = delete_vertex(petersen(), 0);
        o.require(is_overfull(c5) && is_just_overfull(c5), "C5");
        o.require(is_overfull(k5), "K5");
        o.require(! is_overfull(pv), "Petersen-v");
        o.require(overfull_deficiency(c5) == 0, "C5 deficiency " + std::to_string(overfull_deficiency(c5)));
        o.require(overfull_deficiency(k5) == -2, "K5 deficiency " + std::to_string(overfull_deficiency(k5)));
        o.require(overfull_deficiency(pv) == 2, "Petersen-v deficiency " + std::to_string(overfull_deficiency(pv)));
        if (o.pass)
            o.detail = "deficiencies 0, -2, 2";
        return o;
    }

    auto kempe_algebra() -> Outcome
    {
        Outcome o;
        auto lines = graph_lines("connected_le7.g6");
        std::mt19937_64 rng(7);
        auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
        int draws = 0, violations = 0;
        while (draws < 1000) {
            auto g = share(from_graph6(lines[pick(static_cast<int>(lines.size()))]));
            if (g->size() == 0)
                continue;
            // Scramble a proper coloring with a few random swaps so draws are
            // not all greedy colorings.
            auto phi = misra_gries(g);
            int k = phi.k();
            for (int i = pick(4); i > 0; --i) {
                int a = 1 + pick(k), b = 1 + pick(k);
                if (a != b)
                    phi = swap_at(phi, pick(g->order()), a, b);
            }
            int v = pick(g->order());
            int alpha = 1 + pick(k), beta = 1 + pick(k);
            if (alpha == beta)
                continue;
            ++draws;
            auto chain = chain_at(phi, v, alpha, beta);
            auto once = kempe_swap(phi, chain);
            bool ok = validate(phi) && validate(once);
            ok = ok && kempe_swap(once, chain_at(once, v, alpha, beta)) == phi;
            for (int w = 0; w < g->order(); ++w) {
                bool endpoint = chain.is_path() && ! chain.edges.empty()
                    && (w == chain.endpoints().first || w == chain.endpoints().second);
                if (! endpoint)
                    ok = ok && once.missing(w) == phi.missing(w);
            }
            violations += ! ok;
        }
        o.require(violations == 0, std::to_string(violations) + " violation(s)");
        if (o.pass)
            o.detail = std::to_string(draws) + " draws, 0 violations";
        return o;
    }

    auto lemma_suite() -> Outcome
    {
        Outcome o;
        vector<std::pair<string, SimpleGraph>> corpus{{"C5", cycle(5)}, {"C7", cycle(7)}, {"C9", cycle(9)},
            {"K5", complete(5)}, {"K7", complete(7)}, {"Petersen-v", delete_vertex(petersen(), 0)}};
        // Every fifth critical graph with n <= 9, since the named graphs
        // have tiny fans or no critical edge.
        auto critical = graph_lines("critical_le9.g6");
        for (std::size_t i = 0; i < critical.size(); i += 5)
            corpus.emplace_back(critical[i], from_graph6(critical[i]));
        std::map<string, int> totals;
        for (auto & [name, g] : corpus) {
            auto facts = compute_facts(share(g));
            SuiteOptions options;
            options.colorings = 10;
            options.seed = 1;
            auto verdicts = run_lemma_suite(facts, options);
            verdicts.push_back(check_val(facts));
            for (auto & v : verdicts) {
                ++totals[to_string(v.status)];
                o.require(v.status != Status::fail, name + " " + v.check + ": " + v.detail);
                o.require(v.status != Status::unknown, name + " " + v.check + " unknown: " + v.detail);
            }
        }
        if (o.pass) {
            std::ostringstream s;
            for (auto & [status, count] : totals)
                s << (s.tellp() ? ", " : "") << status << " " << count;
            o.detail = std::to_string(corpus.size()) + " graphs: " + s.str();
        }
        return o;
    }

    auto tau_witnesses() -> Outcome
    {
        Outcome o;
        std::map<string, int> totals;
        int cases = 0;
        for (auto & c : fixture::tau_cases(1000)) {
            ++cases;
            for (auto inst : tau_item_instances(c.phi, c.fan)) {
                auto w = witness_tau_item(*c.facts, c.phi, c.fan, inst.item, inst.x, inst.tau);
                auto tag = "item " + std::to_string(inst.item) + " x=" + std::to_string(inst.x) + " tau="
                    + std::to_string(inst.tau) + ": ";
                ++totals[to_string(w.status)];
                o.require(w.status == WitnessStatus::witness || w.status == WitnessStatus::excluded,
                    tag + to_string(w.status) + " " + w.detail);
                if (w.status != WitnessStatus::witness)
                    continue;
                o.require(w.coloring.has_value(), tag + "no coloring");
                if (! w.coloring)
                    continue;
                auto replayed = replay(c.phi, transcript_from_json(to_json(w.transcript)));
                o.require(serialize(replayed) == serialize(*w.coloring), tag + "replay differs");
                o.require(is_avoiding(w.transcript, tau_item_avoid(inst.item, inst.tau, c.phi.k())), tag + "not avoiding");
                o.require(! tau_item_unmet(c.phi, c.fan, inst.item, inst.x, inst.tau, *w.coloring, w.transcript),
                    tag + "target unmet");
            }
        }
        o.require(totals["WITNESS"] > 0, "no witness constructed");
        if (o.pass)
            o.detail = std::to_string(cases) + " colorings, WITNESS " + std::to_string(totals["WITNESS"]) + ", EXCLUDED "
                + std::to_string(totals["EXCLUDED"]);
        return o;
    }

    auto theorem_scan() -> Outcome
    {
        Outcome o;
        long long graphs = 0, critical = 0;
        std::map<string, std::map<string, int>> totals;
        for (auto name : {"connected_le7.g6", "connected_n8.g6", "connected_n9.g6"})
            for (auto & line : graph_lines(name)) {
                ++graphs;
                auto g = share(from_graph6(line));
                auto v = chromatic_index(g);
                o.require(v.exact, line + ": class undecided");
                if (v.edge_class != EdgeClass::two)
                    continue;
                auto facts = compute_facts(g);
                o.require(facts.criticality.delta_critical != Tri::unknown, line + ": criticality undecided");
                if (facts.criticality.delta_critical != Tri::yes)
                    continue;
                ++critical;
                for (auto & t : theorem_names()) {
                    auto verdict = check_theorem(t, facts);
                    ++totals[t][to_string(verdict.status)];
                    o.require(verdict.status != Status::fail, line + " " + t + ": " + verdict.detail);
                }
            }
        o.require(totals["s1-adj"]["PASS"] >= 1, "no non-vacuous s1-adj pass");
        if (o.pass) {
            std::ostringstream s;
            s << graphs << " graphs, " << critical << " critical;";
            for (auto & [t, counts] : totals) {
                s << ' ' << t;
                for (auto & [status, count] : counts)
                    s << ' ' << status << '=' << count;
                s << ';';
            }
            o.detail = s.str();
            o.detail.pop_back();
        }
        return o;
    }

    auto graph6_round_trip() -> Outcome
    {
        Outcome o;
        long long lines = 0;
        vector<string> all;
        for (auto name : {"connected_le7.g6", "connected_n8.g6", "connected_n9.g6", "critical_le9.g6"})
            for (auto & line : graph_lines(name))
                all.push_back(line);
        for (auto & line : oracle::read_lines(fixture::data_path("tau_instances.txt")))
            if (! line.empty())
                all.push_back(line.substr(0, line.find(' ')));
        for (auto & line : all) {
            ++lines;
            auto g = from_graph6(line);
            o.require(to_graph6(g) == line, line + ": round trip differs");
            auto [n, edges] = oracle::decode_graph6(line);
            std::set<std::pair<int, int>> ours;
            for (int e = 0; e < g.size(); ++e)
                ours.insert({g.edge(e).u, g.edge(e).v});
            o.require(n == g.order() && edges == ours, line + ": decoders disagree");
        }
        if (o.pass)
            o.detail = std::to_string(lines) + " lines";
        return o;
    }

    auto scan_determinism() -> Outcome
    {
        Outcome o;
        string input;
        int graphs = 0;
        for (auto & line : graph_lines("connected_le7.g6"))
            if (from_graph6(line).order() == 7) {
                input += line + "\n";
                ++graphs;
            }
        auto run = [&](int workers) {
            ScanOptions options;
            options.workers = workers;
            options.suite.seed = 11;
            std::istringstream in(input);
            std::ostringstream out;
            auto summary = scan_stream(in, out, options);
            return std::make_pair(out.str(), summary);
        };
        auto [one, one_summary] = run(1);
        auto [eight, eight_summary] = run(8);
        auto sorted = [](const string & text) {
            vector<string> rows;
            std::istringstream s(text);
            for (string row; std::getline(s, row);)
                rows.push_back(row);
            std::sort(rows.begin(), rows.end());
            return rows;
        };
        o.require(sorted(one) == sorted(eight), "outputs differ");
        o.require(one == eight, "output order differs");
        o.require(one_summary.graphs == graphs, "graph count " + std::to_string(one_summary.graphs));
        o.require(one_summary.errors == 0, "scan errors");
        if (o.pass)
            o.detail = std::to_string(graphs) + " graphs, " + std::to_string(one.size()) + " bytes identical";
        return o;
    }
}

auto main() -> int
{
    vector<std::pair<string, std::function<auto()->Outcome>>> criteria{
        {"vizing-sweep", vizing_sweep},
        {"known-classes", known_classes},
        {"overfull-arithmetic", overfull_arithmetic},
        {"kempe-algebra", kempe_algebra},
        {"lemma-suite", lemma_suite},
        {"tau-witnesses", tau_witnesses},
        {"theorem-scan", theorem_scan},
        {"graph6-round-trip", graph6_round_trip},
        {"scan-determinism", scan_determinism},
    };

    int failed = 0, index = 0;
    for (auto & [name, run] : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        }
        catch (const std::exception & e) {
            o = Outcome{false, string("exception: ") + e.what()};
        }
        std::chrono::duration<double> seconds = std::chrono::steady_clock::now() - start;
        failed += ! o.pass;
        std::cout << "criterion " << index << " " << name << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail
                  << "; " << static_cast<int>(seconds.count() * 10) / 10.0 << " s)" << std::endl;
    }
    return failed ? 1 : 0;
}
