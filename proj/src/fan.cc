#include <fanforge/errors.hh>
#include <fanforge/fan.hh>
#include <fanforge/solver.hh>

#include <algorithm>
#include <deque>
#include <unordered_set>

using namespace fanforge;

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

auto fanforge::to_string(MaxStatus s) -> string
{
    switch (s) {
        case MaxStatus::unchecked: return "UNCHECKED";
        case MaxStatus::lower_bound: return "LOWER-BOUND";
        case MaxStatus::exact: return "EXACT";
    }
    return "UNCHECKED";
}

auto fanforge::to_string(Stability s) -> string
{
    switch (s) {
        case Stability::none: return "none";
        case Stability::v_f_minus_r: return "V(F-r)-stable";
        case Stability::v_f: return "V(F)-stable";
        case Stability::f_stable: return "F-stable";
    }
    return "none";
}

auto fanforge::make_fan_context(const SimpleGraph & g, int r) -> optional<FanContext>
{
    int delta = g.max_degree();
    FanContext ctx;
    ctx.center = r;
    for (int w : g.neighbors(r)) {
        if (g.degree(w) == delta)
            ctx.delta_neighbors.push_back(w);
        else if (g.degree(w) == delta - 1)
            ctx.near_neighbors.push_back(w);
        else
            return std::nullopt;
    }
    if (ctx.delta_neighbors.size() != 2)
        return std::nullopt;
    return ctx;
}

auto Multifan::vertices() const -> vector<int>
{
    vector<int> result{center};
    result.insert(result.end(), sequence.begin(), sequence.end());
    return result;
}

auto Multifan::contains(int v) const -> bool
{
    return v == center || std::find(sequence.begin(), sequence.end(), v) != sequence.end();
}

namespace
{
    auto uncolored_endpoint_other(const PartialEdgeColoring & phi, int center) -> int
    {
        auto e = phi.uncolored();
        if (! e)
            throw PreconditionError("coloring has no uncolored edge");
        auto & edge = phi.graph().edge(*e);
        if (edge.u != center && edge.v != center)
            throw PreconditionError("center is not an endpoint of the uncolored edge");
        return edge.other(center);
    }

    auto annotate(const PartialEdgeColoring & phi, int center, const vector<int> & sequence) -> Multifan
    {
        Multifan f;
        f.center = center;
        f.uncolored_edge = *phi.uncolored();
        f.sequence = sequence;
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            f.edge_colors.push_back(i == 0 ? 0 : phi.color(*phi.graph().edge_between(center, sequence[i])));
            f.missing.push_back(phi.missing(sequence[i]));
        }
        f.context = make_fan_context(phi.graph(), center);
        return f;
    }

    auto evidence_coloring(const PartialEdgeColoring & phi) -> json
    {
        return json{{"coloring", serialize(phi)}};
    }

    auto fan_json(const Multifan & f) -> json
    {
        return json{{"center", f.center}, {"sequence", f.sequence}};
    }
}

auto fanforge::multifan_violation(const PartialEdgeColoring & phi, int center, const vector<int> & sequence) -> optional<string>
{
    auto & g = phi.graph();
    auto e = phi.uncolored();
    if (! e)
        return "coloring has no uncolored edge";
    if (sequence.empty())
        return "empty sequence";
    auto & edge = g.edge(*e);
    if (! ((edge.u == center && edge.v == sequence[0]) || (edge.v == center && edge.u == sequence[0])))
        return "first spoke is not the uncolored edge";

    int delta = g.max_degree();
    ColorSet seen_missing;
    vector<int> seen;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        int s = sequence[i];
        if (s == center || std::find(seen.begin(), seen.end(), s) != seen.end())
            return "repeated vertex " + std::to_string(s);
        if (! g.adjacent(center, s))
            return "vertex " + std::to_string(s) + " is not a neighbor of the center";
        if (i > 0) {
            if (g.degree(s) == delta)
                return "vertex " + std::to_string(s) + " has maximum degree";
            int c = phi.color(*g.edge_between(center, s));
            if (! seen_missing.contains(c))
                return "spoke to " + std::to_string(s) + " has color " + std::to_string(c) + " not missing earlier";
        }
        seen.push_back(s);
        seen_missing |= phi.missing(s);
    }
    return std::nullopt;
}

auto fanforge::make_multifan(const PartialEdgeColoring & phi, int center, const vector<int> & sequence) -> Multifan
{
    if (auto why = multifan_violation(phi, center, sequence))
        throw PreconditionError("not a multifan: " + *why);
    return annotate(phi, center, sequence);
}

auto fanforge::grow_multifan(const PartialEdgeColoring & phi, int center) -> Multifan
{
    auto & g = phi.graph();
    int s1 = uncolored_endpoint_other(phi, center);
    int delta = g.max_degree();

    vector<int> sequence{s1};
    vector<char> in_fan(g.order(), 0);
    in_fan[center] = in_fan[s1] = 1;
    ColorSet available = phi.missing(s1);
    while (true) {
        int next = -1;
        for (int c : available.to_vector()) {
            auto w = phi.neighbor_via(center, c);
            if (w && ! in_fan[*w] && g.degree(*w) < delta) {
                next = *w;
                break;
            }
        }
        if (next == -1)
            break;
        sequence.push_back(next);
        in_fan[next] = 1;
        available |= phi.missing(next);
    }
    return annotate(phi, center, sequence);
}

auto fanforge::typical_violation(const PartialEdgeColoring & phi, const Multifan & f) -> optional<string>
{
    int k = phi.k();
    if (! phi.missing(f.center).contains(1))
        return "color 1 is not missing at the center";
    if (phi.missing(f.s1()) != ColorSet::of({2, k}))
        return "missing set of s1 is not {2, delta}";

    int p = f.p();
    int alpha = p;
    for (int i = 2; i <= p; ++i)
        if (phi.color(*phi.graph().edge_between(f.center, f.sequence[i - 1])) == k) {
            alpha = i - 1;
            break;
        }
    if (p >= 2 && alpha < 2)
        return "a lone inducing sequence must be the 2-sequence";

    for (int i = 2; i <= p; ++i) {
        int s = f.sequence[i - 1];
        int c = phi.color(*phi.graph().edge_between(f.center, s));
        bool exception = i == alpha + 1 && i >= 3;
        int want_edge = exception ? k : i;
        int want_missing = exception ? alpha + 2 : i + 1;
        if (c != want_edge)
            return "spoke " + std::to_string(i) + " has color " + std::to_string(c) + ", expected " + std::to_string(want_edge);
        if (phi.missing(s) != ColorSet::of({want_missing}))
            return "s_" + std::to_string(i) + " misses " + phi.missing(s).to_string() + ", expected {" + std::to_string(want_missing) + "}";
    }
    return std::nullopt;
}

namespace
{
    auto attach_typical(const PartialEdgeColoring & phi, Multifan f) -> Multifan
    {
        int k = phi.k();
        int p = f.p();
        TypicalForm t;
        t.alpha = p;
        for (int i = 2; i <= p; ++i)
            if (phi.color(*phi.graph().edge_between(f.center, f.sequence[i - 1])) == k) {
                t.alpha = i - 1;
                break;
            }
        t.beta = p;
        for (int i = 2; i <= p; ++i)
            (i <= t.alpha ? t.two_inducing : t.delta_inducing).push_back(f.sequence[i - 1]);
        f.typical = t;
        return f;
    }
}

auto fanforge::normalize_typical(const PartialEdgeColoring & phi, const Multifan & f) -> NormalizedFan
{
    auto & g = phi.graph();
    int k = phi.k();
    int delta = g.max_degree();
    if (k != delta)
        throw PreconditionError("typical form needs a palette of size delta");
    if (! typical_violation(phi, f) && is_elementary(phi, f.vertices())) {
        vector<int> identity(k + 1);
        for (int c = 0; c <= k; ++c)
            identity[c] = c;
        auto fan = attach_typical(phi, f);
        fan.status = f.status;
        return NormalizedFan{phi, fan, identity};
    }
    int light_count = 0;
    for (int w : g.neighbors(f.center))
        light_count += g.degree(w) == delta;
    if (light_count > 2)
        throw PreconditionError("center is not light");
    for (int s : f.sequence)
        if (g.degree(s) != delta - 1)
            throw PreconditionError("fan vertex " + std::to_string(s) + " does not have degree delta - 1");
    if (! is_elementary(phi, f.vertices()))
        throw PreconditionError("fan is not elementary");
    if (phi.missing(f.s1()).size() != 2)
        throw PreconditionError("s1 does not miss exactly two colors");

    // follow each inducing sequence from its root color
    auto chain_from = [&](int root) {
        vector<int> chain;
        int c = root;
        while (true) {
            int next = -1;
            for (int i = 1; i < f.p(); ++i)
                if (phi.color(*g.edge_between(f.center, f.sequence[i])) == c) {
                    next = f.sequence[i];
                    break;
                }
            if (next == -1)
                break;
            chain.push_back(next);
            c = phi.missing(next).single();
        }
        return chain;
    };

    auto roots = phi.missing(f.s1()).to_vector();
    auto chain_a = chain_from(roots[0]), chain_b = chain_from(roots[1]);
    int two_root = roots[0], delta_root = roots[1];
    if (chain_a.empty() && ! chain_b.empty()) {
        std::swap(two_root, delta_root);
        std::swap(chain_a, chain_b);
    }
    if (static_cast<int>(chain_a.size() + chain_b.size()) != f.p() - 1)
        throw std::logic_error("inducing sequences do not cover the fan");

    vector<int> mapping(k + 1, 0);
    vector<char> used(k + 1, 0);
    auto assign = [&](int from, int to) {
        mapping[from] = to;
        used[to] = 1;
    };

    auto r_missing = phi.missing(f.center).to_vector();
    assign(r_missing[0], 1);
    assign(two_root, 2);
    int label = 3;
    for (int v : chain_a)
        assign(phi.missing(v).single(), label++);
    assign(delta_root, k);
    for (int v : chain_b)
        assign(phi.missing(v).single(), label++);

    int high = k - 1;
    for (std::size_t i = 1; i < r_missing.size(); ++i) {
        while (used[high])
            --high;
        assign(r_missing[i], high);
    }
    int low = 1;
    for (int c = 1; c <= k; ++c)
        if (mapping[c] == 0) {
            while (used[low])
                ++low;
            assign(c, low);
        }

    auto recolored = relabel(phi, mapping);
    vector<int> sequence{f.s1()};
    sequence.insert(sequence.end(), chain_a.begin(), chain_a.end());
    sequence.insert(sequence.end(), chain_b.begin(), chain_b.end());
    auto fan = make_multifan(recolored, f.center, sequence);
    if (auto why = typical_violation(recolored, fan))
        throw std::logic_error("normalization failed: " + *why);
    fan = attach_typical(recolored, fan);
    fan.status = f.status;
    return NormalizedFan{recolored, fan, mapping};
}

auto fanforge::multifan_size_bound(const SimpleGraph & g, int center, int s1) -> int
{
    int delta = g.max_degree();
    int count = 2;
    for (int w : g.neighbors(center))
        if (w != s1 && g.degree(w) < delta)
            ++count;
    return count;
}

auto fanforge::search_maximum_multifan(const GraphPtr & g, int e, int center, SearchMode mode, long long budget,
    const optional<PartialEdgeColoring> & start) -> MaximumFan
{
    auto & edge = g->edge(e);
    if (edge.u != center && edge.v != center)
        throw PreconditionError("center is not an endpoint of the edge");
    int delta = g->max_degree();
    int bound = multifan_size_bound(*g, center, edge.other(center));

    optional<MaximumFan> best;
    long long examined = 0;
    auto consider = [&](const PartialEdgeColoring & phi) {
        ++examined;
        auto f = grow_multifan(phi, center);
        if (! best || f.vertex_count() > best->fan.vertex_count())
            best = MaximumFan{phi, f, MaxStatus::lower_bound, 0, bound};
        return best->fan.vertex_count() < bound;
    };

    bool complete = false;
    if (mode == SearchMode::exhaustive) {
        EnumerationOptions options;
        options.up_to_color_permutation = true;
        options.limit = std::max<long long>(budget, 1);
        auto summary = for_each_coloring(g, e, delta, options, consider);
        complete = ! summary.truncated;
    }
    else {
        auto initial = start;
        if (! initial) {
            auto outcome = find_coloring(g, delta, e, default_node_budget);
            if (outcome.result != SearchResult::found)
                throw PreconditionError("G - e has no delta-coloring");
            initial = outcome.coloring;
        }
        if (initial->uncolored() != e)
            throw PreconditionError("start coloring must leave the edge uncolored");

        std::unordered_set<std::uint64_t> seen{initial->hash()};
        std::deque<PartialEdgeColoring> queue{*initial};
        bool go_on = true;
        while (! queue.empty() && go_on) {
            auto phi = std::move(queue.front());
            queue.pop_front();
            go_on = consider(phi);
            if (! go_on || examined > budget)
                break;

            auto f = grow_multifan(phi, center);
            ColorSet touched = missing_of(phi, f.vertices());
            for (int a = 1; a <= delta; ++a) {
                if (! touched.contains(a))
                    continue;
                for (int b = 1; b <= delta; ++b) {
                    if (b == a || (touched.contains(b) && b < a))
                        continue;
                    vector<char> done(g->order(), 0);
                    for (int v = 0; v < g->order(); ++v) {
                        if (done[v])
                            continue;
                        auto chain = chain_at(phi, v, a, b);
                        for (int w : chain.vertices)
                            done[w] = 1;
                        if (chain.edges.empty())
                            continue;
                        auto next = kempe_swap(phi, chain);
                        if (seen.insert(next.hash()).second)
                            queue.push_back(std::move(next));
                    }
                }
            }
        }
    }

    if (! best)
        throw PreconditionError("G - e has no delta-coloring");
    best->examined = examined;
    best->status = (complete || best->fan.vertex_count() >= bound) ? MaxStatus::exact : MaxStatus::lower_bound;
    best->fan.status = best->status;
    return *best;
}

auto fanforge::inducing_map(const PartialEdgeColoring & phi, const Multifan & f) -> vector<InducingEntry>
{
    if (! is_elementary(phi, f.vertices()))
        throw PreconditionError("inducing map needs an elementary fan");
    auto & g = phi.graph();
    vector<InducingEntry> result;
    for (int c : phi.missing(f.s1()).to_vector())
        result.push_back(InducingEntry{c, f.s1(), c, {}});

    // predecessor of s_i: the earlier vertex missing the color of rs_i
    vector<int> pred(f.p(), -1);
    for (int i = 1; i < f.p(); ++i) {
        int c = phi.color(*g.edge_between(f.center, f.sequence[i]));
        for (int j = 0; j < i; ++j)
            if (phi.missing(f.sequence[j]).contains(c))
                pred[i] = j;
    }
    for (int i = 1; i < f.p(); ++i) {
        vector<int> seq;
        int j = i;
        while (pred[j] > 0) {
            seq.push_back(f.sequence[j]);
            j = pred[j];
        }
        seq.push_back(f.sequence[j]);
        std::reverse(seq.begin(), seq.end());
        int root = phi.color(*g.edge_between(f.center, seq.front()));
        for (int c : phi.missing(f.sequence[i]).to_vector())
            result.push_back(InducingEntry{c, f.sequence[i], root, seq});
    }
    return result;
}

auto fanforge::inducing_root(const vector<InducingEntry> & map, int c) -> int
{
    for (auto & entry : map)
        if (entry.color == c)
            return entry.root;
    return 0;
}

auto fanforge::stability_class(const PartialEdgeColoring & phi_new, const PartialEdgeColoring & phi_old, const Multifan & f) -> Stability
{
    if (! (phi_new.graph() == phi_old.graph()) || phi_new.k() != phi_old.k())
        throw PreconditionError("stability needs colorings of the same graph and palette");
    if (phi_new.uncolored() != phi_old.uncolored())
        throw PreconditionError("stability needs the same uncolored edge");

    auto & g = phi_old.graph();
    bool f_stable = true;
    for (int v : f.vertices())
        f_stable = f_stable && phi_new.missing(v) == phi_old.missing(v);
    for (int i = 1; i < f.p() && f_stable; ++i) {
        int e = *g.edge_between(f.center, f.sequence[i]);
        f_stable = phi_new.color(e) == phi_old.color(e);
    }
    if (f_stable)
        return Stability::f_stable;

    if (phi_new.missing(f.s1()) != phi_old.missing(f.s1()))
        return Stability::none;
    ColorSet old_union, new_union;
    for (int s : f.sequence) {
        old_union |= phi_old.missing(s);
        new_union |= phi_new.missing(s);
    }
    if (old_union != new_union)
        return Stability::none;

    // V(F) must again be the vertex set of a multifan at r
    vector<char> reached(g.order(), 0);
    reached[f.s1()] = 1;
    ColorSet available = phi_new.missing(f.s1());
    int count = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int s : f.sequence)
            if (! reached[s] && available.contains(phi_new.color(*g.edge_between(f.center, s)))) {
                reached[s] = 1;
                available |= phi_new.missing(s);
                ++count;
                grew = true;
            }
    }
    if (count != f.p())
        return Stability::none;

    return phi_new.missing(f.center) == phi_old.missing(f.center) ? Stability::v_f : Stability::v_f_minus_r;
}

auto fanforge::kierstead_violation(const PartialEdgeColoring & phi, const vector<int> & vertices) -> optional<string>
{
    auto & g = phi.graph();
    auto e = phi.uncolored();
    if (! e)
        return "coloring has no uncolored edge";
    if (vertices.size() < 2)
        return "path needs at least two vertices";
    if (g.edge_between(vertices[0], vertices[1]) != e)
        return "first edge is not the uncolored edge";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                return "repeated vertex";
    ColorSet earlier;
    for (std::size_t i = 2; i < vertices.size(); ++i) {
        earlier |= phi.missing(vertices[i - 2]);
        auto f = g.edge_between(vertices[i - 1], vertices[i]);
        if (! f)
            return "consecutive vertices not adjacent";
        if (! earlier.contains(phi.color(*f)))
            return "edge " + std::to_string(i - 1) + "-" + std::to_string(i) + " color not missing at an earlier vertex";
    }
    return std::nullopt;
}

auto fanforge::grow_kierstead_path(const PartialEdgeColoring & phi, int v0, int max_len) -> KiersteadPath
{
    int v1 = uncolored_endpoint_other(phi, v0);
    KiersteadPath k{{v0, v1}, *phi.uncolored()};
    ColorSet earlier;
    while (static_cast<int>(k.vertices.size()) < max_len) {
        earlier |= phi.missing(k.vertices[k.vertices.size() - 2]);
        int last = k.vertices.back();
        int next = -1;
        for (int c : earlier.to_vector()) {
            auto w = phi.neighbor_via(last, c);
            if (w && std::find(k.vertices.begin(), k.vertices.end(), *w) == k.vertices.end()) {
                next = *w;
                break;
            }
        }
        if (next == -1)
            break;
        k.vertices.push_back(next);
    }
    return k;
}

auto fanforge::all_kierstead_paths(const PartialEdgeColoring & phi, int v0, int vertex_count) -> vector<KiersteadPath>
{
    int v1 = uncolored_endpoint_other(phi, v0);
    vector<KiersteadPath> result;
    vector<int> current{v0, v1};
    auto extend = [&](auto & self) -> void {
        if (static_cast<int>(current.size()) == vertex_count) {
            result.push_back(KiersteadPath{current, *phi.uncolored()});
            return;
        }
        ColorSet earlier;
        for (std::size_t j = 0; j + 1 < current.size(); ++j)
            earlier |= phi.missing(current[j]);
        for (int c : earlier.to_vector()) {
            auto w = phi.neighbor_via(current.back(), c);
            if (w && std::find(current.begin(), current.end(), *w) == current.end()) {
                current.push_back(*w);
                self(self);
                current.pop_back();
            }
        }
    };
    extend(extend);
    return result;
}

auto fanforge::fan_hypotheses(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> optional<string>
{
    if (! facts.exact())
        return "class undecided within budget";
    if (! facts.class_two())
        return "graph is class one";
    if (phi.k() != facts.delta())
        return "palette is not delta";
    auto e = phi.uncolored();
    if (! e)
        return "coloring has no uncolored edge";
    if (facts.edge_critical(*e) != Tri::yes)
        return "uncolored edge is not critical";
    if (auto why = multifan_violation(phi, f.center, f.sequence))
        return "not a multifan: " + *why;
    return std::nullopt;
}

auto fanforge::verify_fan_elementary(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict
{
    const string name = "fan-elementary";
    if (auto why = fan_hypotheses(facts, phi, f))
        return facts.exact() ? Verdict::inapplicable(name, *why) : Verdict::unknown(name, *why);
    auto vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            auto clash = phi.missing(vs[i]) & phi.missing(vs[j]);
            if (! clash.empty()) {
                auto ev = evidence_coloring(phi);
                ev["fan"] = fan_json(f);
                ev["vertices"] = {vs[i], vs[j]};
                ev["color"] = clash.first();
                return Verdict::fail(name, "vertices " + std::to_string(vs[i]) + " and " + std::to_string(vs[j]) + " both miss " + std::to_string(clash.first()), ev);
            }
        }
    return Verdict::pass(name);
}

auto fanforge::verify_fan_linkage(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict
{
    const string name = "fan-linkage";
    if (auto why = fan_hypotheses(facts, phi, f))
        return facts.exact() ? Verdict::inapplicable(name, *why) : Verdict::unknown(name, *why);
    if (! is_elementary(phi, f.vertices())) {
        auto ev = evidence_coloring(phi);
        ev["fan"] = fan_json(f);
        return Verdict::fail(name, "fan is not elementary", ev);
    }

    auto failure = [&](const string & part, const string & what, json extra) {
        auto ev = evidence_coloring(phi);
        ev["fan"] = fan_json(f);
        ev["part"] = part;
        ev.update(extra);
        return Verdict::fail(name, "(" + part + ") " + what, ev);
    };

    int r = f.center;
    for (int gamma : phi.missing(r).to_vector())
        for (int s : f.sequence)
            for (int delta_color : phi.missing(s).to_vector())
                if (! are_linked(phi, r, s, gamma, delta_color))
                    return failure("a", "center and " + std::to_string(s) + " not linked", json{{"vertex", s}, {"colors", {gamma, delta_color}}});

    auto map = inducing_map(phi, f);
    for (int i = 0; i < f.p(); ++i)
        for (int j = 0; j < f.p(); ++j) {
            int si = f.sequence[i], sj = f.sequence[j];
            for (int dc : phi.missing(si).to_vector())
                for (int lc : phi.missing(sj).to_vector()) {
                    if (dc == lc)
                        continue;
                    int root_d = inducing_root(map, dc), root_l = inducing_root(map, lc);
                    if (root_d != root_l) {
                        if (! are_linked(phi, si, sj, dc, lc))
                            return failure("b", "cross-inducer pair not linked", json{{"vertices", {si, sj}}, {"colors", {dc, lc}}});
                    }
                    else if (j > i && ! are_linked(phi, si, sj, dc, lc)) {
                        if (! chain_at(phi, sj, dc, lc).contains_vertex(r))
                            return failure("c", "center not on the later vertex's chain", json{{"vertices", {si, sj}}, {"colors", {dc, lc}}});
                    }
                }
        }
    return Verdict::pass(name);
}

auto fanforge::verify_kp_elementary(const GraphFacts & facts, const PartialEdgeColoring & phi, const KiersteadPath & k) -> Verdict
{
    const string name = "kierstead-elementary";
    if (! facts.exact())
        return Verdict::unknown(name, "class undecided within budget");
    if (! facts.class_two())
        return Verdict::inapplicable(name, "graph is class one");
    if (phi.k() != facts.delta())
        return Verdict::inapplicable(name, "palette is not delta");
    if (facts.edge_critical(k.uncolored_edge) != Tri::yes)
        return Verdict::inapplicable(name, "uncolored edge is not critical");
    if (k.vertices.size() != 4)
        return Verdict::inapplicable(name, "path does not have four vertices");
    if (auto why = kierstead_violation(phi, k.vertices))
        return Verdict::inapplicable(name, "not a Kierstead path: " + *why);
    auto & g = phi.graph();
    if (std::min(g.degree(k.vertices[1]), g.degree(k.vertices[2])) >= facts.delta())
        return Verdict::inapplicable(name, "v1 and v2 both have maximum degree");
    if (! is_elementary(phi, k.vertices)) {
        auto ev = evidence_coloring(phi);
        ev["path"] = k.vertices;
        return Verdict::fail(name, "path vertex set is not elementary", ev);
    }
    return Verdict::pass(name);
}

auto fanforge::verify_stable_swaps(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict
{
    const string name = "stable-swaps";
    if (auto why = fan_hypotheses(facts, phi, f))
        return facts.exact() ? Verdict::inapplicable(name, *why) : Verdict::unknown(name, *why);
    if (! facts.light(f.center))
        return Verdict::inapplicable(name, "center is not light");
    if (! f.typical)
        return Verdict::inapplicable(name, "fan is not in typical form");
    if (! is_elementary(phi, f.vertices()))
        return Verdict::inapplicable(name, "fan is not elementary");

    int k = phi.k();
    auto map = inducing_map(phi, f);
    auto fan_missing = missing_of(phi, f.vertices());
    int checked = 0;

    auto expect = [&](const PartialEdgeColoring & after, Stability want, int x, int a, int b, const string & bullet) -> optional<Verdict> {
        ++checked;
        auto got = stability_class(after, phi, f);
        if (got >= want)
            return std::nullopt;
        auto ev = evidence_coloring(phi);
        ev["fan"] = fan_json(f);
        ev["x"] = x;
        ev["colors"] = {a, b};
        ev["bullet"] = bullet;
        ev["obtained"] = fanforge::to_string(got);
        return Verdict::fail(name, bullet + ": swap at " + std::to_string(x) + " gave " + fanforge::to_string(got), ev);
    };

    for (int gamma : fan_missing.to_vector()) {
        int root = inducing_root(map, gamma);
        for (int x = 0; x < phi.graph().order(); ++x) {
            if (f.contains(x))
                continue;
            auto mx = phi.missing(x);
            if (gamma != 1 && (mx.contains(1) || mx.contains(gamma)))
                if (auto v = expect(swap_at(phi, x, 1, gamma), Stability::f_stable, x, 1, gamma, "(1,gamma)"))
                    return *v;
            int partner = root == 2 ? k : root == k ? 2 : 0;
            if (partner != 0 && gamma != partner && (mx.contains(gamma) || mx.contains(partner))) {
                auto chain = chain_at(phi, x, gamma, partner);
                auto want = chain.contains_vertex(f.center) ? Stability::v_f : Stability::f_stable;
                if (auto v = expect(kempe_swap(phi, chain), want, x, gamma, partner, root == 2 ? "(gamma,delta)" : "(2,gamma)"))
                    return *v;
            }
        }
    }
    return Verdict::pass(name, std::to_string(checked) + " swaps classified");
}
