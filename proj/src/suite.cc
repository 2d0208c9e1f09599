#include <fanforge/errors.hh>
#include <fanforge/recolor.hh>
#include <fanforge/solver.hh>
#include <fanforge/suite.hh>
#include <fanforge/theorems.hh>

#include <algorithm>
#include <map>
#include <random>

using namespace fanforge;

using std::string;
using std::vector;

auto fanforge::lemma_check_names() -> const vector<string> &
{
    static const vector<string> names{"fan-elementary", "fan-linkage", "kierstead-elementary", "stable-swaps",
        "tau-sequence", "rs1-linkage", "tau-items", "pfan", "pfan-adjacency", "center-cover", "parity"};
    return names;
}

namespace
{
    struct Collector
    {
        std::map<string, vector<Verdict>> parts;
        vector<string> wanted;

        auto wants(const string & name) const -> bool
        {
            return std::find(wanted.begin(), wanted.end(), name) != wanted.end();
        }

        auto add(Verdict v) -> void
        {
            if (wants(v.check))
                parts[v.check].push_back(std::move(v));
        }
    };

    // Reservoir sample of the first `pool` colorings of G - e.
    auto sample_colorings(const GraphPtr & g, int e, const SuiteOptions & options) -> vector<PartialEdgeColoring>
    {
        std::mt19937_64 rng(options.seed * 1'000'003 + static_cast<std::uint64_t>(e));
        vector<PartialEdgeColoring> chosen;
        long long seen = 0;
        EnumerationOptions enumeration;
        enumeration.limit = options.pool;
        enumeration.budget = options.budget * 10;
        for_each_coloring(g, e, g->max_degree(), enumeration, [&](const PartialEdgeColoring & phi) {
            ++seen;
            if (static_cast<int>(chosen.size()) < options.colorings)
                chosen.push_back(phi);
            else {
                auto slot = std::uniform_int_distribution<long long>(0, seen - 1)(rng);
                if (slot < options.colorings)
                    chosen[slot] = phi;
            }
            return true;
        });
        return chosen;
    }

    auto complete_on_rest(const PartialEdgeColoring & phi) -> PartialEdgeColoring
    {
        auto & g = phi.graph();
        auto h = share(delete_edge(g, *phi.uncolored()));
        vector<int> colors(h->size(), 0);
        for (int f = 0; f < g.size(); ++f)
            if (auto id = h->edge_between(g.edge(f).u, g.edge(f).v))
                colors[*id] = phi.color(f);
        return PartialEdgeColoring(h, phi.k(), colors);
    }

    auto from_witness(const TauWitness & w, const TauInstance & inst) -> Verdict
    {
        const string name = "tau-items";
        auto tag = "item " + std::to_string(inst.item) + " at " + std::to_string(inst.x) + " with tau " + std::to_string(inst.tau);
        switch (w.status) {
            case WitnessStatus::witness:
            case WitnessStatus::excluded: return Verdict::pass(name);
            case WitnessStatus::inapplicable: return Verdict::inapplicable(name, tag + ": " + w.detail);
            case WitnessStatus::unknown: return Verdict::unknown(name, tag + ": " + w.detail);
            case WitnessStatus::fail: break;
        }
        nlohmann::json ev{{"item", inst.item}, {"x", inst.x}, {"tau", inst.tau}, {"transcript", to_json(w.transcript)}};
        if (w.coloring)
            ev["coloring"] = serialize(*w.coloring);
        return Verdict::fail(name, tag + ": " + w.detail, ev);
    }

    auto maximum_checks(Collector & out, const GraphFacts & facts, const PartialEdgeColoring & phi, Multifan fan,
        MaxStatus status, const SuiteOptions & options) -> void
    {
        fan.status = status;
        if (out.wants("center-cover"))
            out.add(verify_center_not_covered(facts, phi, fan));

        std::optional<NormalizedFan> n;
        try {
            n = normalize_typical(phi, fan);
        }
        catch (const PreconditionError & e) {
            for (auto name : {"tau-sequence", "rs1-linkage", "tau-items", "pfan", "pfan-adjacency"})
                out.add(Verdict::inapplicable(name, string("no typical form: ") + e.what()));
            return;
        }
        n->fan.status = status;
        auto & psi = n->coloring;
        auto & f = n->fan;
        out.add(verify_tau_sequences(facts, psi, f));
        out.add(verify_rs1_linkage(facts, psi, f));
        if (out.wants("pfan") || out.wants("pfan-adjacency")) {
            auto s = grow_pfan(psi, f, options.p2_budget);
            out.add(verify_pfan_properties(facts, psi, s));
            out.add(verify_pfan_neighbors(facts, psi, s));
        }
        if (out.wants("tau-items")) {
            if (auto why = tau_hypotheses(facts, psi, f))
                out.add(Verdict::inapplicable("tau-items", *why));
            else
                for (auto & inst : tau_item_instances(psi, f)) {
                    WitnessOptions wo;
                    wo.search_budget = options.witness_budget;
                    out.add(from_witness(witness_tau_item(facts, psi, f, inst.item, inst.x, inst.tau, wo), inst));
                }
        }
    }
}

auto fanforge::run_lemma_suite(const GraphFacts & facts, const SuiteOptions & options) -> vector<Verdict>
{
    Collector out;
    out.wanted = options.checks.empty() ? lemma_check_names() : options.checks;
    for (auto & name : out.wanted)
        if (std::find(lemma_check_names().begin(), lemma_check_names().end(), name) == lemma_check_names().end())
            throw PreconditionError("unknown lemma check " + name);

    auto & g = facts.graph;
    vector<Verdict> result;
    if (! facts.exact()) {
        for (auto & name : out.wanted)
            result.push_back(Verdict::unknown(name, "class undecided within budget"));
        return result;
    }

    bool undecided = false;
    for (int e = 0; facts.class_two() && e < g->size(); ++e) {
        auto critical = facts.edge_critical(e);
        undecided = undecided || critical == Tri::unknown;
        if (critical != Tri::yes)
            continue;
        auto sample = sample_colorings(g, e, options);
        for (auto & phi : sample) {
            if (out.wants("parity"))
                out.add(check_parity(complete_on_rest(phi)));
            for (int r : {g->edge(e).u, g->edge(e).v}) {
                auto fan = grow_multifan(phi, r);
                out.add(verify_fan_elementary(facts, phi, fan));
                out.add(verify_fan_linkage(facts, phi, fan));
                if (out.wants("kierstead-elementary"))
                    for (auto & k : all_kierstead_paths(phi, r, 4))
                        out.add(verify_kp_elementary(facts, phi, k));
                if (out.wants("stable-swaps")) {
                    try {
                        auto n = normalize_typical(phi, fan);
                        out.add(verify_stable_swaps(facts, n.coloring, n.fan));
                    }
                    catch (const PreconditionError & ex) {
                        out.add(Verdict::inapplicable("stable-swaps", string("no typical form: ") + ex.what()));
                    }
                }
            }
        }

        for (int r : {g->edge(e).u, g->edge(e).v}) {
            auto best = search_maximum_multifan(g, e, r, options.mode, options.budget);
            int used = 0;
            for (auto & phi : sample) {
                auto fan = grow_multifan(phi, r);
                if (fan.vertex_count() != best.fan.vertex_count())
                    continue;
                maximum_checks(out, facts, phi, fan, best.status, options);
                ++used;
            }
            if (used == 0)
                maximum_checks(out, facts, best.coloring, best.fan, best.status, options);
        }
    }

    for (auto & name : out.wanted) {
        auto & parts = out.parts[name];
        if (parts.empty())
            result.push_back(! facts.class_two() ? Verdict::inapplicable(name, "graph is class one")
                    : undecided                  ? Verdict::unknown(name, "edge criticality undecided within budget")
                                                 : Verdict::inapplicable(name, "no instance"));
        else
            result.push_back(combine(name, parts));
    }
    return result;
}
