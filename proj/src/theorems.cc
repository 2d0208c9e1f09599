#include <fanforge/errors.hh>
#include <fanforge/recolor.hh>
#include <fanforge/solver.hh>
#include <fanforge/theorems.hh>

#include <algorithm>
#include <deque>
#include <unordered_set>

using namespace fanforge;

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

auto fanforge::to_string(P2Status s) -> string
{
    switch (s) {
        case P2Status::verified_exhaustive: return "VERIFIED-EXHAUSTIVE";
        case P2Status::verified_within_budget: return "VERIFIED-WITHIN-BUDGET";
        case P2Status::violated: return "VIOLATED";
        case P2Status::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace
{
    auto unchecked_verdict(const GraphFacts & facts, const string & name, const string & why) -> Verdict
    {
        return facts.exact() ? Verdict::inapplicable(name, why) : Verdict::unknown(name, why);
    }

    auto same_missing_on(const PartialEdgeColoring & a, const PartialEdgeColoring & b, const vector<int> & vs) -> bool
    {
        return std::all_of(vs.begin(), vs.end(), [&](int v) { return a.missing(v) == b.missing(v); });
    }

    auto spoke_edges(const PartialEdgeColoring & phi, const Multifan & f) -> vector<int>
    {
        vector<int> result;
        for (int i = 1; i < f.p(); ++i)
            result.push_back(*phi.graph().edge_between(f.center, f.sequence[i]));
        return result;
    }

    auto evidence(const PartialEdgeColoring & phi, const Multifan & f) -> json
    {
        return json{{"coloring", serialize(phi)}, {"fan", {{"center", f.center}, {"sequence", f.sequence}}}};
    }

    // Shared gate of the P-fan lemmas: a light max-degree center, every
    // vertex of S other than r in N_{delta-1}(r), and (P2) not refuted.
    auto pfan_gate(const GraphFacts & facts, const PartialEdgeColoring & phi, const PFan & s) -> optional<string>
    {
        if (auto why = fan_hypotheses(facts, phi, s.base))
            return why;
        auto & g = phi.graph();
        int r = s.base.center;
        if (g.degree(r) != facts.delta() || ! facts.light(r))
            return "center is not a light max-degree vertex";
        auto vs = s.vertices();
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (g.degree(vs[i]) != facts.delta() - 1)
                return "vertex " + std::to_string(vs[i]) + " is not in N_{delta-1}(r)";
        if (s.p2 == P2Status::violated)
            return "an F-stable coloring breaks elementarity";
        return std::nullopt;
    }

    auto pfan_certified(const PFan & s) -> bool
    {
        return s.base.status == MaxStatus::exact && (s.extension.empty() || s.p2 == P2Status::verified_exhaustive);
    }

    auto pfan_evidence(const PartialEdgeColoring & phi, const PFan & s) -> json
    {
        auto ev = evidence(phi, s.base);
        ev["extension"] = s.extension;
        ev["p2"] = to_string(s.p2);
        return ev;
    }

    auto report(const string & name, bool certified, optional<string> failure, json ev, const string & caveat) -> Verdict
    {
        if (failure)
            return certified ? Verdict::fail(name, *failure, ev) : Verdict::unknown(name, *failure + "; " + caveat);
        return certified ? Verdict::pass(name) : Verdict::conditional(name, "holds; " + caveat);
    }
}

auto fanforge::check_p2(const PartialEdgeColoring & phi, const Multifan & f, const vector<int> & vertices, long long budget)
    -> P2Check
{
    P2Check result;
    result.examined = 1;
    if (! is_elementary(phi, vertices)) {
        result.status = P2Status::violated;
        result.witness = phi;
        return result;
    }
    if (budget <= 0)
        return result;

    auto fan_vertices = f.vertices();
    auto & g = phi.graph();
    EnumerationOptions options;
    options.limit = budget;
    options.pinned.assign(g.size(), 0);
    for (int e : spoke_edges(phi, f))
        options.pinned[e] = phi.color(e);
    result.examined = 0;
    auto summary = for_each_coloring(phi.graph_ptr(), phi.uncolored(), phi.k(), options, [&](const PartialEdgeColoring & psi) {
        ++result.examined;
        if (same_missing_on(psi, phi, fan_vertices) && ! is_elementary(psi, vertices)) {
            result.witness = psi;
            return false;
        }
        return true;
    });
    if (result.witness) {
        result.status = P2Status::violated;
        return result;
    }
    if (! summary.truncated) {
        result.status = P2Status::verified_exhaustive;
        return result;
    }

    // enumeration ran out: walk F-stable Kempe neighbors of phi instead
    std::deque<PartialEdgeColoring> queue{phi};
    std::unordered_set<std::uint64_t> seen{phi.hash()};
    long long visited = 0;
    while (! queue.empty() && visited < budget) {
        auto current = std::move(queue.front());
        queue.pop_front();
        ++visited;
        for (int a = 1; a <= phi.k(); ++a)
            for (int b = a + 1; b <= phi.k(); ++b) {
                vector<char> done(g.order(), 0);
                for (int v = 0; v < g.order(); ++v) {
                    if (done[v])
                        continue;
                    auto chain = chain_at(current, v, a, b);
                    for (int u : chain.vertices)
                        done[u] = 1;
                    if (chain.edges.empty())
                        continue;
                    auto next = kempe_swap(current, chain);
                    if (! seen.insert(next.hash()).second || stability_class(next, phi, f) != Stability::f_stable)
                        continue;
                    if (! is_elementary(next, vertices)) {
                        result.examined += visited;
                        result.status = P2Status::violated;
                        result.witness = next;
                        return result;
                    }
                    queue.push_back(std::move(next));
                }
            }
    }
    result.examined += visited;
    result.status = P2Status::verified_within_budget;
    return result;
}

auto PFan::vertices() const -> vector<int>
{
    auto result = base.vertices();
    result.insert(result.end(), extension.begin(), extension.end());
    return result;
}

auto fanforge::grow_pfan(const PartialEdgeColoring & phi, const Multifan & base, long long budget) -> PFan
{
    auto & g = phi.graph();
    int r = base.center;
    PFan s;
    s.base = base;
    optional<P2Check> last;
    for (int w : g.neighbors(r)) {
        if (g.degree(w) != g.max_degree() - 1 || base.contains(w))
            continue;
        auto trial = s.vertices();
        trial.push_back(w);
        auto check = check_p2(phi, base, trial, budget);
        s.examined += check.examined;
        if (check.status == P2Status::violated) {
            s.rejected.push_back(w);
            s.rejection_witnesses.push_back(*check.witness);
            continue;
        }
        s.extension.push_back(w);
        last = check;
    }
    if (! last) {
        last = check_p2(phi, base, s.vertices(), budget);
        s.examined += last->examined;
    }
    s.p2 = last->status;
    return s;
}

auto fanforge::verify_pfan_properties(const GraphFacts & facts, const PartialEdgeColoring & phi, const PFan & s) -> Verdict
{
    const string name = "pfan";
    if (auto why = pfan_gate(facts, phi, s))
        return unchecked_verdict(facts, name, *why);
    if (s.extension.empty())
        return Verdict::pass(name, "empty extension");

    auto & g = phi.graph();
    int r = s.base.center;
    int one = phi.missing(r).single();
    auto ev = pfan_evidence(phi, s);
    optional<string> failure;

    for (int v1 : s.extension) {
        int tau = phi.color(*g.edge_between(r, v1));
        try {
            auto seq = build_tau_sequence(phi, s.base, tau);
            if (seq.type != TauType::a) {
                failure = "the " + std::to_string(tau) + "-sequence from " + std::to_string(v1) + " is not a rotation";
                ev["sequence"] = seq.vertices;
            }
            else
                for (int v : seq.vertices)
                    if (! are_linked(phi, v, r, one, phi.missing(v).single())) {
                        failure = "vertex " + std::to_string(v) + " is not linked with r";
                        ev["vertex"] = v;
                        break;
                    }
        }
        catch (const Error & e) {
            failure = "the " + std::to_string(tau) + "-sequence from " + std::to_string(v1) + " breaks off: " + e.what();
        }
        if (failure)
            return report(name, pfan_certified(s), failure, ev, "P-fan not certified");
    }

    for (int si : s.base.sequence)
        for (int sj : s.extension)
            for (int gamma : phi.missing(si).to_vector())
                for (int delta : phi.missing(sj).to_vector()) {
                    auto chain = chain_at(phi, si, gamma, delta);
                    auto pair = "P_" + std::to_string(si) + "(" + std::to_string(gamma) + "," + std::to_string(delta) + ")";
                    if (! chain.contains_vertex(r) || ! chain.contains_vertex(sj))
                        failure = pair + " misses r or " + std::to_string(sj);
                    else if (auto z = phi.neighbor_via(r, gamma); z && ! meets_before(chain, si, *z, r))
                        failure = pair + " meets r before " + std::to_string(*z);
                    if (failure) {
                        ev["chain"] = chain.vertices;
                        return report(name, pfan_certified(s), failure, ev, "P-fan not certified");
                    }
                }
    return report(name, pfan_certified(s), std::nullopt, ev, "P-fan not certified");
}

auto fanforge::verify_pfan_neighbors(const GraphFacts & facts, const PartialEdgeColoring & phi, const PFan & s) -> Verdict
{
    const string name = "pfan-adjacency";
    if (facts.delta() < 3)
        return Verdict::inapplicable(name, "delta < 3");
    if (auto why = pfan_gate(facts, phi, s))
        return unchecked_verdict(facts, name, *why);
    auto & g = phi.graph();
    int r = s.base.center;
    auto vs = s.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i)
        for (int x : g.neighbors(vs[i]))
            if (x != r && ! g.adjacent(r, x) && g.degree(x) == facts.delta() - 1) {
                auto ev = pfan_evidence(phi, s);
                ev["vertex"] = x;
                return report(name, pfan_certified(s),
                    "vertex " + std::to_string(x) + " of degree delta - 1 is adjacent to " + std::to_string(vs[i]), ev,
                    "P-fan not certified");
            }
    return report(name, pfan_certified(s), std::nullopt, {}, "P-fan not certified");
}

auto fanforge::verify_center_not_covered(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f)
    -> Verdict
{
    const string name = "center-cover";
    if (facts.delta() < 3)
        return Verdict::inapplicable(name, "delta < 3");
    if (auto why = fan_hypotheses(facts, phi, f))
        return unchecked_verdict(facts, name, *why);
    auto & g = phi.graph();
    int r = f.center;
    int delta = facts.delta();
    if (g.degree(r) != delta - 1 || ! facts.light(r))
        return Verdict::inapplicable(name, "center is not a light vertex of degree delta - 1");

    bool certified = f.status == MaxStatus::exact;
    auto missing_r = phi.missing(r);
    for (int x = 0; x < g.order(); ++x) {
        if (x == r || g.adjacent(r, x))
            continue;
        bool applies = false;
        for (int u : g.neighbors(x))
            if (g.adjacent(u, f.s1()) && u != r && ! (g.adjacent(r, u) && g.degree(u) == delta - 1))
                applies = true;
        if (applies && missing_r.subset_of(phi.missing(x))) {
            auto ev = evidence(phi, f);
            ev["vertex"] = x;
            return report(name, certified, "vertex " + std::to_string(x) + " misses every color missing at r", ev,
                "fan maximality not certified");
        }
    }
    return report(name, certified, std::nullopt, {}, "fan maximality not certified");
}

auto fanforge::check_val(const GraphFacts & facts) -> Verdict
{
    const string name = "val";
    if (! facts.exact())
        return Verdict::unknown(name, "class undecided within budget");
    if (! facts.class_two())
        return Verdict::inapplicable(name, "graph is class one");
    auto & g = *facts.graph;
    int delta = facts.delta();
    bool any = false, undecided = false;
    for (int e = 0; e < g.size(); ++e) {
        auto critical = facts.edge_critical(e);
        if (critical == Tri::unknown)
            undecided = true;
        if (critical != Tri::yes)
            continue;
        any = true;
        for (auto [x, y] : {std::pair{g.edge(e).u, g.edge(e).v}, std::pair{g.edge(e).v, g.edge(e).u}}) {
            int count = 0;
            for (int w : g.neighbors(x))
                count += w != y && g.degree(w) == delta;
            if (count < delta - g.degree(y) + 1)
                return Verdict::fail(name,
                    "vertex " + std::to_string(x) + " has " + std::to_string(count) + " max-degree neighbors besides " +
                        std::to_string(y),
                    json{{"edge", {x, y}}, {"count", count}});
        }
    }
    if (undecided)
        return Verdict::unknown(name, "edge criticality undecided within budget");
    if (! any)
        return Verdict::inapplicable(name, "no critical edge");
    return Verdict::pass(name);
}

auto fanforge::check_parity(const PartialEdgeColoring & phi) -> Verdict
{
    const string name = "parity";
    if (phi.uncolored())
        return Verdict::inapplicable(name, "coloring is not complete");
    auto parity = parity_check(phi);
    if (parity.ok())
        return Verdict::pass(name);
    return Verdict::fail(name, "color " + std::to_string(parity.violating_colors.front()) + " has the wrong parity",
        json{{"coloring", serialize(phi)}, {"colors", parity.violating_colors}});
}

namespace
{
    // Light max-degree vertices r with a neighbor s of degree < delta and rs
    // critical. Calls visit(r, s); returns false if some rs was undecided.
    template <typename Visit>
    auto for_each_light_pair(const GraphFacts & facts, int max_s_degree, Visit visit) -> bool
    {
        auto & g = *facts.graph;
        int delta = facts.delta();
        bool decided = true;
        for (int r = 0; r < g.order(); ++r) {
            if (g.degree(r) != delta || ! facts.light(r))
                continue;
            for (int s : g.neighbors(r)) {
                if (g.degree(s) > max_s_degree)
                    continue;
                auto critical = facts.edge_critical(*g.edge_between(r, s));
                if (critical == Tri::unknown)
                    decided = false;
                if (critical == Tri::yes && ! visit(r, s))
                    return decided;
            }
        }
        return decided;
    }

    auto check_s1_adjacency(const GraphFacts & facts) -> Verdict
    {
        const string name = "s1-adj";
        auto & g = *facts.graph;
        int delta = facts.delta();
        bool any = false;
        optional<Verdict> failure;
        bool decided = for_each_light_pair(facts, delta - 1, [&](int r, int s) {
            any = true;
            for (int x : g.neighbors(s))
                if (x != r && ! g.adjacent(r, x) && g.degree(x) != delta) {
                    failure = Verdict::fail(name,
                        "neighbor " + std::to_string(x) + " of " + std::to_string(s) + " has degree " + std::to_string(g.degree(x)),
                        json{{"r", r}, {"s", s}, {"x", x}});
                    return false;
                }
            return true;
        });
        if (failure)
            return *failure;
        if (! decided)
            return Verdict::unknown(name, "edge criticality undecided within budget");
        return any ? Verdict::pass(name) : Verdict::inapplicable(name, "no light max-degree vertex with a critical edge to a smaller degree");
    }

    auto check_long_kempe(const GraphFacts & facts) -> Verdict
    {
        const string name = "longk";
        auto & g = *facts.graph;
        int delta = facts.delta();
        bool any = false;
        optional<Verdict> failure;
        bool decided = for_each_light_pair(facts, delta - 1, [&](int r, int s) {
            if (g.degree(s) != delta - 1)
                return true;
            any = true;
            for (int x = 0; x < g.order(); ++x) {
                if (x == r || g.adjacent(r, x) || g.degree(x) > delta - 3)
                    continue;
                for (int u : g.neighbors(x))
                    if (g.adjacent(u, s) && ! (g.adjacent(r, u) && g.degree(u) != delta)) {
                        failure = Verdict::fail(name,
                            "common neighbor " + std::to_string(u) + " of " + std::to_string(x) + " and " + std::to_string(s) +
                                " is outside N(r) minus its max-degree vertices",
                            json{{"r", r}, {"s", s}, {"x", x}, {"u", u}});
                        return false;
                    }
            }
            return true;
        });
        if (failure)
            return *failure;
        if (! decided)
            return Verdict::unknown(name, "edge criticality undecided within budget");
        return any ? Verdict::pass(name) : Verdict::inapplicable(name, "no light max-degree vertex with a critical edge to a (delta-1)-vertex");
    }

    // Delta-critical, delta > n/2 + 1 and min degree of the core at most 2.
    auto dense_gate(const GraphFacts & facts) -> optional<Verdict>
    {
        auto n = facts.graph->order();
        if (2 * facts.delta() <= n + 2)
            return Verdict::inapplicable("", "delta <= n/2 + 1");
        if (facts.profile.core_min_degree > 2)
            return Verdict::inapplicable("", "core minimum degree > 2");
        switch (facts.criticality.delta_critical) {
            case Tri::no: return Verdict::inapplicable("", "not delta-critical");
            case Tri::unknown: return Verdict::unknown("", "criticality undecided within budget");
            case Tri::yes: return std::nullopt;
        }
        return std::nullopt;
    }

    auto named(Verdict v, const string & name) -> Verdict
    {
        v.check = name;
        return v;
    }
}

auto fanforge::theorem_names() -> const vector<string> &
{
    static const vector<string> names{"s1-adj", "longk", "longk2", "main"};
    return names;
}

auto fanforge::check_theorem(const string & name, const GraphFacts & facts) -> Verdict
{
    if (name == "s1-adj" || name == "longk") {
        if (! facts.exact())
            return Verdict::unknown(name, "class undecided within budget");
        if (! facts.class_two())
            return Verdict::inapplicable(name, "graph is class one");
        return name == "s1-adj" ? check_s1_adjacency(facts) : check_long_kempe(facts);
    }
    if (name == "longk2" || name == "main") {
        if (auto gate = dense_gate(facts))
            return named(*gate, name);
        auto & g = *facts.graph;
        if (name == "longk2")
            return g.order() % 2 == 1 ? Verdict::pass(name)
                                      : Verdict::fail(name, "order is even", json{{"n", g.order()}});
        return is_overfull(g) ? Verdict::pass(name)
                              : Verdict::fail(name, "graph is not overfull",
                                    json{{"n", g.order()}, {"m", g.size()}, {"delta", facts.delta()}});
    }
    throw PreconditionError("unknown theorem " + name);
}

auto fanforge::conjecture_names() -> const vector<string> &
{
    static const vector<string> names{"just-overfull", "overfull"};
    return names;
}

auto fanforge::check_conjecture(const string & name, const GraphFacts & facts, const SolverOptions & options) -> Verdict
{
    auto & g = *facts.graph;
    long long n = g.order(), delta = facts.delta();
    bool applies, holds;
    if (name == "just-overfull") {
        applies = 2 * delta >= n;
        holds = is_just_overfull(g);
    }
    else if (name == "overfull") {
        applies = 3 * delta > n;
        holds = is_overfull(g);
    }
    else
        throw PreconditionError("unknown conjecture " + name);

    if (! applies)
        return Verdict::inapplicable(name, name == "overfull" ? "delta <= n/3" : "delta < n/2");
    switch (facts.criticality.delta_critical) {
        case Tri::no: return Verdict::inapplicable(name, "not delta-critical");
        case Tri::unknown: return Verdict::unknown(name, "criticality undecided within budget");
        case Tri::yes: break;
    }
    if (holds)
        return Verdict::pass(name);

    auto recheck = options;
    recheck.alternate_order = ! options.alternate_order;
    recheck.use_overfull_shortcut = false;
    if (is_delta_critical(facts.graph, recheck) != Tri::yes)
        return Verdict::unknown(name, "criticality not confirmed by the alternate edge order");
    return Verdict::fail(name, name == "overfull" ? "graph is not overfull" : "graph is not just overfull",
        json{{"n", n}, {"m", g.size()}, {"delta", delta}});
}
