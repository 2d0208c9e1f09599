#include <fanforge/errors.hh>
#include <fanforge/recolor.hh>

#include <algorithm>
#include <unordered_set>

using namespace fanforge;

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

auto fanforge::to_string(TauType t) -> string
{
    switch (t) {
        case TauType::a: return "A";
        case TauType::b: return "B";
        case TauType::c: return "C";
    }
    return "A";
}

auto fanforge::to_string(WitnessStatus s) -> string
{
    switch (s) {
        case WitnessStatus::witness: return "WITNESS";
        case WitnessStatus::excluded: return "EXCLUDED";
        case WitnessStatus::fail: return "FAIL";
        case WitnessStatus::inapplicable: return "INAPPLICABLE";
        case WitnessStatus::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

auto fanforge::eligible_taus(const PartialEdgeColoring & phi, const Multifan & f) -> vector<int>
{
    auto covered = missing_of(phi, f.vertices());
    vector<int> result;
    for (int c = 1; c <= phi.k(); ++c)
        if (! covered.contains(c))
            result.push_back(c);
    return result;
}

auto fanforge::build_tau_sequence(const PartialEdgeColoring & phi, const Multifan & f, int tau) -> TauSequence
{
    auto & g = phi.graph();
    int r = f.center;
    int delta = g.max_degree();
    auto covered = missing_of(phi, f.vertices());
    if (tau < 1 || tau > phi.k() || covered.contains(tau))
        throw PreconditionError("tau " + std::to_string(tau) + " is missing on the fan");

    auto step_to = [&](int c) {
        auto w = phi.neighbor_via(r, c);
        if (! w)
            throw PreconditionError("no edge at the center has color " + std::to_string(c));
        if (g.degree(*w) == delta)
            throw MaximalityViolation("color " + std::to_string(c) + " leads to max-degree vertex " + std::to_string(*w), tau, *w);
        if (f.contains(*w))
            throw PreconditionError("walk re-enters the fan at " + std::to_string(*w));
        if (phi.missing(*w).size() != 1)
            throw PreconditionError("vertex " + std::to_string(*w) + " does not miss exactly one color");
        return *w;
    };

    TauSequence seq;
    seq.tau = tau;
    seq.vertices.push_back(step_to(tau));
    while (true) {
        int c = phi.missing(seq.last()).single();
        if (c == tau) {
            seq.type = TauType::a;
            return seq;
        }
        if (covered.contains(c)) {
            seq.type = TauType::b;
            seq.terminal_color = c;
            return seq;
        }
        for (int j = 0; j + 1 < seq.t(); ++j)
            if (phi.missing(seq.vertices[j]).single() == c) {
                seq.type = TauType::c;
                seq.terminal_index = j + 2;
                return seq;
            }
        seq.vertices.push_back(step_to(c));
    }
}

auto Step::swap(int anchor, int alpha, int beta) -> Step
{
    Step s;
    s.op = Op::swap;
    s.anchor = anchor;
    s.alpha = std::min(alpha, beta);
    s.beta = std::max(alpha, beta);
    return s;
}

auto Step::shift(int center, vector<int> range) -> Step
{
    Step s;
    s.op = Op::shift;
    s.center = center;
    s.range = std::move(range);
    return s;
}

auto Step::relabel(vector<int> mapping) -> Step
{
    Step s;
    s.op = Op::relabel;
    s.mapping = std::move(mapping);
    return s;
}

auto fanforge::shift(const PartialEdgeColoring & phi, int center, const vector<int> & vertices) -> PartialEdgeColoring
{
    auto & g = phi.graph();
    vector<std::pair<int, int>> plan;
    for (int v : vertices) {
        auto e = g.edge_between(center, v);
        if (! e || phi.color(*e) == 0)
            throw ShiftRejected("no colored edge from the center to " + std::to_string(v));
        if (phi.missing(v).size() != 1)
            throw ShiftRejected("vertex " + std::to_string(v) + " does not miss exactly one color");
        plan.emplace_back(*e, phi.missing(v).single());
    }
    auto result = phi;
    for (auto & [e, c] : plan)
        result.set_color(e, 0);
    for (auto & [e, c] : plan)
        result.set_color(e, c);
    if (! validate(result))
        throw ShiftRejected("shift leaves an improper coloring");
    return result;
}

auto fanforge::apply_step(const PartialEdgeColoring & phi, const Step & step) -> PartialEdgeColoring
{
    switch (step.op) {
        case Step::Op::swap: return swap_at(phi, step.anchor, step.alpha, step.beta);
        case Step::Op::shift: return shift(phi, step.center, step.range);
        case Step::Op::relabel: return relabel(phi, step.mapping);
    }
    return phi;
}

auto fanforge::replay(const PartialEdgeColoring & start, const Transcript & transcript) -> PartialEdgeColoring
{
    auto phi = start;
    for (auto & step : transcript.steps)
        phi = apply_step(phi, step);
    return phi;
}

auto fanforge::is_avoiding(const Transcript & transcript, ColorSet s) -> bool
{
    return std::none_of(transcript.steps.begin(), transcript.steps.end(), [&](const Step & step) {
        return step.op == Step::Op::swap && (s.contains(step.alpha) || s.contains(step.beta));
    });
}

auto fanforge::has_non_kempe_steps(const Transcript & transcript) -> bool
{
    return std::any_of(transcript.steps.begin(), transcript.steps.end(),
        [](const Step & step) { return step.op != Step::Op::swap; });
}

auto fanforge::to_json(const Step & step) -> json
{
    switch (step.op) {
        case Step::Op::swap: return json{{"op", "swap"}, {"colors", {step.alpha, step.beta}}, {"anchor", step.anchor}};
        case Step::Op::shift: return json{{"op", "shift"}, {"center", step.center}, {"range", step.range}};
        case Step::Op::relabel: return json{{"op", "relabel"}, {"bijection", step.mapping}};
    }
    return json::object();
}

auto fanforge::to_json(const Transcript & transcript) -> json
{
    auto result = json::array();
    for (auto & step : transcript.steps)
        result.push_back(to_json(step));
    return result;
}

auto fanforge::transcript_from_json(const json & j) -> Transcript
{
    Transcript t;
    try {
        for (auto & item : j) {
            auto op = item.at("op").get<string>();
            if (op == "swap") {
                auto colors = item.at("colors").get<vector<int>>();
                if (colors.size() != 2)
                    throw ParseError("swap needs two colors");
                t.steps.push_back(Step::swap(item.at("anchor").get<int>(), colors[0], colors[1]));
            }
            else if (op == "shift")
                t.steps.push_back(Step::shift(item.at("center").get<int>(), item.at("range").get<vector<int>>()));
            else if (op == "relabel")
                t.steps.push_back(Step::relabel(item.at("bijection").get<vector<int>>()));
            else
                throw ParseError("unknown transcript op " + op);
        }
    }
    catch (const json::exception & e) {
        throw ParseError(string("malformed transcript: ") + e.what());
    }
    return t;
}

auto Recorder::swap(int anchor, int alpha, int beta) -> void
{
    auto step = Step::swap(anchor, alpha, beta);
    _current = apply_step(_current, step);
    _transcript.steps.push_back(step);
}

auto Recorder::shift(int center, const vector<int> & vertices) -> void
{
    auto step = Step::shift(center, vertices);
    _current = apply_step(_current, step);
    _transcript.steps.push_back(step);
}

auto Recorder::relabel_pair(int a, int b) -> void
{
    vector<int> mapping(_current.k() + 1);
    for (int c = 0; c <= _current.k(); ++c)
        mapping[c] = c;
    std::swap(mapping[a], mapping[b]);
    auto step = Step::relabel(mapping);
    _current = apply_step(_current, step);
    _transcript.steps.push_back(step);
}

auto fanforge::tau_hypotheses(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> optional<string>
{
    if (auto why = fan_hypotheses(facts, phi, f))
        return why;
    if (! facts.light(f.center))
        return "center is not light";
    if (! make_fan_context(phi.graph(), f.center))
        return "center needs exactly two max-degree neighbors and the rest of degree delta - 1";
    if (auto why = typical_violation(phi, f))
        return "fan is not typical: " + *why;
    if (! is_elementary(phi, f.vertices()))
        return "fan is not elementary";
    return std::nullopt;
}

namespace
{
    auto base_evidence(const PartialEdgeColoring & phi, const Multifan & f) -> json
    {
        return json{{"coloring", serialize(phi)}, {"fan", {{"center", f.center}, {"sequence", f.sequence}}}};
    }

    auto sequence_violation(const PartialEdgeColoring & phi, const Multifan & f, const TauSequence & seq) -> optional<string>
    {
        auto & g = phi.graph();
        int r = f.center;
        auto covered = missing_of(phi, f.vertices());
        if (seq.vertices.empty())
            return "empty sequence";
        for (int i = 0; i < seq.t(); ++i) {
            int v = seq.vertices[i];
            if (std::count(seq.vertices.begin(), seq.vertices.end(), v) != 1)
                return "repeated vertex";
            if (! g.adjacent(r, v) || f.contains(v) || g.degree(v) != g.max_degree() - 1)
                return "vertex " + std::to_string(v) + " is not a (delta-1)-neighbor outside the fan";
            int want = i == 0 ? seq.tau : phi.missing(seq.vertices[i - 1]).single();
            if (phi.color(*g.edge_between(r, v)) != want)
                return "edge to " + std::to_string(v) + " has the wrong color";
        }
        vector<int> head(seq.vertices.begin(), seq.vertices.end() - 1);
        if (! is_elementary(phi, head))
            return "prefix is not elementary";
        for (int v : head)
            if (covered.intersects(phi.missing(v)))
                return "prefix vertex misses a fan color";
        int last = phi.missing(seq.last()).single();
        bool a = last == seq.tau;
        bool b = covered.contains(last);
        bool c = false;
        for (int j = 0; j + 2 < seq.t(); ++j)
            c = c || phi.missing(seq.vertices[j]).single() == last;
        if (a + b + c != 1)
            return "terminal condition is not unique";
        auto tag = a ? TauType::a : b ? TauType::b : TauType::c;
        if (tag != seq.type)
            return "type tag " + to_string(seq.type) + " but the terminal says " + to_string(tag);
        return std::nullopt;
    }
}

auto fanforge::verify_tau_sequences(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict
{
    const string name = "tau-sequence";
    if (auto why = tau_hypotheses(facts, phi, f))
        return facts.exact() ? Verdict::inapplicable(name, *why) : Verdict::unknown(name, *why);
    bool certified = f.status == MaxStatus::exact;
    int checked = 0;
    for (int tau : eligible_taus(phi, f)) {
        try {
            auto seq = build_tau_sequence(phi, f, tau);
            if (auto why = sequence_violation(phi, f, seq)) {
                auto ev = base_evidence(phi, f);
                ev["tau"] = tau;
                return Verdict::fail(name, "tau " + std::to_string(tau) + ": " + *why, ev);
            }
            ++checked;
        }
        catch (const MaximalityViolation & e) {
            if (! certified)
                return Verdict::conditional(name, string("fan maximality not certified: ") + e.what());
            auto ev = base_evidence(phi, f);
            ev["tau"] = tau;
            ev["vertex"] = e.vertex;
            return Verdict::fail(name, e.what(), ev);
        }
    }
    if (! certified)
        return Verdict::conditional(name, std::to_string(checked) + " sequences valid; fan maximality not certified");
    return Verdict::pass(name, std::to_string(checked) + " sequences");
}

auto fanforge::verify_rs1_linkage(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict
{
    const string name = "rs1-linkage";
    if (auto why = tau_hypotheses(facts, phi, f))
        return facts.exact() ? Verdict::inapplicable(name, *why) : Verdict::unknown(name, *why);
    int delta = phi.k();
    bool certified = f.status == MaxStatus::exact;
    for (int tau : eligible_taus(phi, f))
        for (int other : {delta, 2}) {
            auto chain = chain_at(phi, f.s1(), tau, other);
            if (! chain.contains_vertex(f.center)) {
                auto detail = "r is off P_s1(" + std::to_string(std::min(tau, other)) + "," +
                    std::to_string(std::max(tau, other)) + ")";
                if (! certified)
                    return Verdict::conditional(name, detail + "; fan maximality not certified");
                auto ev = base_evidence(phi, f);
                ev["tau"] = tau;
                ev["chain"] = chain.vertices;
                return Verdict::fail(name, detail, ev);
            }
        }
    if (! certified)
        return Verdict::conditional(name, "holds; fan maximality not certified");
    return Verdict::pass(name);
}

auto fanforge::unlink_via_shifting(const PartialEdgeColoring & phi, const Multifan & f, int tau, int x, int y, int other)
    -> ShiftResult
{
    auto seq = build_tau_sequence(phi, f, tau);
    auto chain = chain_at(phi, x, tau, other);
    if (! chain.is_path() || ! chain.contains_vertex(y) || x == y)
        throw PreconditionError("x and y are not the ends of one chain");
    auto [a, b] = chain.endpoints();
    if (! ((a == x && b == y) || (a == y && b == x)))
        throw PreconditionError("x and y are not the ends of one chain");
    if (! chain.contains_edge(*phi.graph().edge_between(f.center, seq.vertices.front())))
        throw PreconditionError("the chain does not use r v_1");
    for (int v : seq.vertices)
        if (v == x || v == y)
            throw PreconditionError("an end of the chain lies on the tau-sequence");
    bool eligible = seq.type == TauType::a || (seq.type == TauType::b && seq.terminal_color == 1);
    if (! eligible)
        throw PreconditionError("neither A- nor B-shifting is eligible");
    Recorder rec(phi);
    rec.shift(f.center, seq.vertices);
    return ShiftResult{rec.current(), rec.transcript()};
}

auto fanforge::tau_item_avoid(int item, int tau, int delta) -> ColorSet
{
    switch (item) {
        case 1: return {};
        case 2: return ColorSet::of({delta});
        case 3: return ColorSet::of({tau, delta});
        case 4: return ColorSet::of({2, tau, delta});
        case 5: return ColorSet::of({1, tau});
        case 6:
        case 7: return ColorSet::of({1, tau, delta});
    }
    throw PreconditionError("item must be in [1,7]");
}

namespace
{
    auto required_stability(int item) -> Stability
    {
        return item == 1 ? Stability::f_stable : item <= 4 ? Stability::v_f_minus_r : Stability::v_f;
    }

    auto off_chain(const PartialEdgeColoring & phi, int s1, int x, int a, int b) -> bool
    {
        return ! chain_at(phi, s1, a, b).contains_vertex(x);
    }

    auto target_met(const PartialEdgeColoring & cand, const Multifan & f, int item, int x, int tau) -> bool
    {
        int delta = cand.k();
        int s1 = f.s1();
        switch (item) {
            case 1: return cand.missing(x).contains(1);
            case 2: return cand.missing(f.center).intersects(cand.missing(x));
            case 3:
            case 4:
            case 6: return off_chain(cand, s1, x, tau, delta);
            case 5: return off_chain(cand, s1, x, tau, delta) || off_chain(cand, s1, x, 2, tau);
            case 7: return off_chain(cand, s1, x, 2, tau);
        }
        return false;
    }

    // The multifan on V(F) under a coloring that keeps V(F) a multifan,
    // listed in closure order.
    auto refan(const PartialEdgeColoring & phi, const Multifan & f) -> optional<Multifan>
    {
        vector<int> order{f.s1()};
        ColorSet available = phi.missing(f.s1());
        bool grew = true;
        while (grew) {
            grew = false;
            for (int c : available.to_vector()) {
                auto w = phi.neighbor_via(f.center, c);
                if (w && f.contains(*w) && std::find(order.begin(), order.end(), *w) == order.end()) {
                    order.push_back(*w);
                    available |= phi.missing(*w);
                    grew = true;
                    break;
                }
            }
        }
        if (static_cast<int>(order.size()) != f.p() || ! is_elementary(phi, f.vertices()))
            return std::nullopt;
        return make_multifan(phi, f.center, order);
    }

    auto unless_holds(int item, const TauSequence & seq, int root, int delta) -> bool
    {
        if (seq.type != TauType::b)
            return false;
        int gamma = seq.terminal_color;
        switch (item) {
            case 2:
            case 3: return gamma == delta;
            case 4: return gamma == 2 || gamma == delta;
            case 5: return gamma == 1;
            case 6:
            case 7: return gamma == 1 || gamma == delta || root == 2;
        }
        return false;
    }

    auto root_of(const PartialEdgeColoring & phi, const Multifan & f, int c) -> int
    {
        return inducing_root(inducing_map(phi, f), c);
    }

    // True when cand is a checked reduction to the excluded form.
    auto reduced_to_excluded(const PartialEdgeColoring & phi, const Multifan & f, int item, int tau,
        const PartialEdgeColoring & cand, const Transcript & transcript) -> bool
    {
        if (! validate(cand) || replay(phi, transcript) != cand)
            return false;
        if (! is_avoiding(transcript, tau_item_avoid(item, tau, phi.k())))
            return false;
        if (stability_class(cand, phi, f) < required_stability(item))
            return false;
        auto fan = refan(cand, f);
        if (! fan)
            return false;
        try {
            auto seq = build_tau_sequence(cand, *fan, tau);
            int root = seq.type == TauType::b ? root_of(cand, *fan, seq.terminal_color) : 0;
            return unless_holds(item, seq, root, cand.k());
        }
        catch (const Error &) {
            return false;
        }
    }

    struct Attempt
    {
        Recorder recorder;
        bool reduced = false;
    };

    // One of v_{i-1}, v_t whose (partner, tau_i)-chain avoids r.
    auto unlinked_end(const PartialEdgeColoring & phi, int r, const TauSequence & seq, int partner) -> optional<int>
    {
        int ti = phi.missing(seq.last()).single();
        for (int v : {seq.vertices[seq.terminal_index - 2], seq.last()})
            if (! chain_at(phi, v, partner, ti).contains_vertex(r))
                return v;
        return std::nullopt;
    }

    auto construct(const PartialEdgeColoring & phi, const Multifan & f, int item, int x, int tau) -> Attempt
    {
        int r = f.center;
        int delta = phi.k();
        Attempt at{Recorder(phi)};
        auto & rec = at.recorder;

        if ((item == 1 || item == 2) && ! are_linked(phi, x, r, 1, tau)) {
            rec.swap(x, 1, tau);
            return at;
        }

        auto seq = build_tau_sequence(rec.current(), f, tau);
        if (seq.type == TauType::c) {
            int partner = item <= 4 ? 1 : item == 5 ? delta : 2;
            auto v = unlinked_end(rec.current(), r, seq, partner);
            if (! v)
                return at;
            rec.swap(*v, partner, rec.current().missing(*v).single());
            seq = build_tau_sequence(rec.current(), f, tau);
        }

        if (seq.type == TauType::a) {
            if (item == 1 || item == 2) {
                rec.swap(seq.last(), 1, tau);
                rec.shift(r, seq.vertices);
                if (item == 1)
                    rec.relabel_pair(1, tau);
            }
            else
                rec.shift(r, seq.vertices);
            return at;
        }
        if (seq.type != TauType::b)
            return at;

        int gamma = seq.terminal_color;
        int vt = seq.last();
        if (item <= 4) {
            if (gamma != 1)
                rec.swap(vt, 1, gamma);
            rec.shift(r, seq.vertices);
            if (item == 1)
                rec.relabel_pair(1, tau);
            return at;
        }

        auto fan = refan(rec.current(), f);
        if (! fan)
            return at;
        int root = root_of(rec.current(), *fan, gamma);
        if (item == 5) {
            int near = root == 2 ? delta : 2;
            if (gamma != near)
                rec.swap(vt, gamma, near);
            rec.swap(vt, near, tau);
            auto again = build_tau_sequence(rec.current(), f, tau);
            if (again.type == TauType::a)
                rec.shift(r, again.vertices);
            return at;
        }
        if (root == delta && gamma != delta) {
            rec.swap(vt, 2, gamma);
            at.reduced = true;
        }
        return at;
    }

    struct Node
    {
        PartialEdgeColoring coloring;
        int parent;
        Step step;
    };

    auto moves(const PartialEdgeColoring & phi, const Multifan & f, int item, ColorSet avoid) -> vector<Step>
    {
        vector<Step> result;
        int k = phi.k();
        auto & g = phi.graph();
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                if (avoid.contains(a) || avoid.contains(b))
                    continue;
                vector<char> done(g.order(), 0);
                for (int v = 0; v < g.order(); ++v) {
                    if (done[v])
                        continue;
                    auto chain = chain_at(phi, v, a, b);
                    for (int w : chain.vertices)
                        done[w] = 1;
                    if (! chain.edges.empty())
                        result.push_back(Step::swap(v, a, b));
                }
            }
        for (int t : eligible_taus(phi, f)) {
            try {
                auto seq = build_tau_sequence(phi, f, t);
                bool a = seq.type == TauType::a;
                bool b = seq.type == TauType::b && phi.missing(f.center).contains(seq.terminal_color);
                if (a || b)
                    result.push_back(Step::shift(f.center, seq.vertices));
            }
            catch (const Error &) {
            }
        }
        if (item == 1)
            for (int t : eligible_taus(phi, f)) {
                vector<int> mapping(k + 1);
                for (int c = 0; c <= k; ++c)
                    mapping[c] = c;
                std::swap(mapping[1], mapping[t]);
                result.push_back(Step::relabel(mapping));
            }
        return result;
    }

    auto search(const PartialEdgeColoring & phi, const Multifan & f, int item, int x, int tau, long long budget,
        bool & exhausted) -> optional<Transcript>
    {
        auto avoid = tau_item_avoid(item, tau, phi.k());
        vector<Node> nodes{Node{phi, -1, {}}};
        std::unordered_set<std::uint64_t> seen{phi.hash()};
        std::size_t head = 0;
        exhausted = false;
        while (head < nodes.size()) {
            if (static_cast<long long>(head) >= budget)
                return std::nullopt;
            auto current = nodes[head].coloring;
            int index = static_cast<int>(head++);
            if (index > 0 && stability_class(current, phi, f) >= required_stability(item) &&
                target_met(current, f, item, x, tau)) {
                Transcript t;
                for (int i = index; i > 0; i = nodes[i].parent)
                    t.steps.push_back(nodes[i].step);
                std::reverse(t.steps.begin(), t.steps.end());
                return t;
            }
            for (auto & step : moves(current, f, item, avoid)) {
                try {
                    auto next = apply_step(current, step);
                    if (seen.insert(next.hash()).second)
                        nodes.push_back(Node{std::move(next), index, step});
                }
                catch (const ShiftRejected &) {
                }
            }
        }
        exhausted = true;
        return std::nullopt;
    }
}

auto fanforge::tau_item_unmet(const PartialEdgeColoring & phi, const Multifan & f, int item, int x, int tau,
    const PartialEdgeColoring & candidate, const Transcript & transcript) -> optional<string>
{
    if (! validate(candidate))
        return "coloring is not proper";
    if (candidate.uncolored() != phi.uncolored())
        return "uncolored edge changed";
    if (serialize(replay(phi, transcript)) != serialize(candidate))
        return "transcript does not replay to the coloring";
    if (! is_avoiding(transcript, tau_item_avoid(item, tau, phi.k())))
        return "a Kempe change uses an avoided color";
    auto got = stability_class(candidate, phi, f);
    if (got < required_stability(item))
        return "coloring is only " + to_string(got);
    if (! target_met(candidate, f, item, x, tau))
        return "target condition fails";
    return std::nullopt;
}

auto fanforge::tau_item_instances(const PartialEdgeColoring & phi, const Multifan & f) -> vector<TauInstance>
{
    auto & g = phi.graph();
    int r = f.center;
    int delta = phi.k();
    vector<TauInstance> result;
    for (int x = 0; x < g.order(); ++x) {
        if (x == r || g.adjacent(r, x))
            continue;
        for (int tau : eligible_taus(phi, f)) {
            auto mx = phi.missing(x);
            if (! mx.contains(tau) && ! mx.contains(delta))
                continue;
            for (int item = 1; item <= 7; ++item) {
                bool needs_tau = item == 1 || item == 2 || item == 7;
                if (! needs_tau || mx.contains(tau))
                    result.push_back(TauInstance{item, x, tau});
            }
        }
    }
    return result;
}

auto fanforge::witness_tau_item(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f, int item,
    int x, int tau, const WitnessOptions & options) -> TauWitness
{
    TauWitness w;
    auto & g = phi.graph();
    int r = f.center;
    int delta = phi.k();
    if (item < 1 || item > 7)
        throw PreconditionError("item must be in [1,7]");

    if (auto why = tau_hypotheses(facts, phi, f)) {
        w.status = facts.exact() ? WitnessStatus::inapplicable : WitnessStatus::unknown;
        w.detail = *why;
        return w;
    }
    if (g.degree(r) + 1 == g.order()) {
        w.status = WitnessStatus::inapplicable;
        w.detail = "N[r] is the whole vertex set";
        return w;
    }
    if (missing_of(phi, f.vertices()) == ColorSet::range(1, delta)) {
        w.status = WitnessStatus::inapplicable;
        w.detail = "the fan misses every color";
        return w;
    }
    if (x == r || g.adjacent(r, x))
        throw PreconditionError("x must lie outside N[r]");
    auto eligible = eligible_taus(phi, f);
    if (std::find(eligible.begin(), eligible.end(), tau) == eligible.end())
        throw PreconditionError("tau is missing on the fan");
    auto mx = phi.missing(x);
    if (! mx.contains(tau) && ! mx.contains(delta))
        throw PreconditionError("x misses neither tau nor delta");
    if ((item == 1 || item == 2 || item == 7) && ! mx.contains(tau))
        throw PreconditionError("this item needs tau missing at x");

    bool certified = f.status == MaxStatus::exact;
    auto fail_status = certified ? WitnessStatus::fail : WitnessStatus::unknown;

    TauSequence seq;
    try {
        seq = build_tau_sequence(phi, f, tau);
    }
    catch (const MaximalityViolation & e) {
        w.status = fail_status;
        w.detail = e.what();
        return w;
    }

    int root = seq.type == TauType::b ? root_of(phi, f, seq.terminal_color) : 0;
    if (unless_holds(item, seq, root, delta)) {
        w.status = WitnessStatus::excluded;
        w.method = "unless";
        w.detail = "type B ending in color " + std::to_string(seq.terminal_color);
        return w;
    }

    if (target_met(phi, f, item, x, tau)) {
        w.status = WitnessStatus::witness;
        w.method = "trivial";
        w.coloring = phi;
        return w;
    }

    string construction_note;
    try {
        auto at = construct(phi, f, item, x, tau);
        auto & cand = at.recorder.current();
        auto & tr = at.recorder.transcript();
        if (at.reduced && reduced_to_excluded(phi, f, item, tau, cand, tr)) {
            w.status = WitnessStatus::excluded;
            w.method = "reduced";
            w.coloring = cand;
            w.transcript = tr;
            return w;
        }
        auto unmet = tau_item_unmet(phi, f, item, x, tau, cand, tr);
        if (! unmet) {
            w.status = WitnessStatus::witness;
            w.method = "construction";
            w.coloring = cand;
            w.transcript = tr;
            return w;
        }
        construction_note = *unmet;
    }
    catch (const Error & e) {
        construction_note = e.what();
    }

    bool exhausted = false;
    if (auto t = search(phi, f, item, x, tau, options.search_budget, exhausted)) {
        w.status = WitnessStatus::witness;
        w.method = "search";
        w.coloring = replay(phi, *t);
        w.transcript = *t;
        w.detail = "construction: " + construction_note;
        return w;
    }
    w.status = exhausted ? fail_status : WitnessStatus::unknown;
    w.detail = "construction: " + construction_note + (exhausted ? "; search space exhausted" : "; search budget reached");
    return w;
}

auto fanforge::find_kempe_equivalent(const PartialEdgeColoring & start, const PartialEdgeColoring & target, long long budget)
    -> optional<Transcript>
{
    vector<Node> nodes{Node{start, -1, {}}};
    std::unordered_set<std::uint64_t> seen{start.hash()};
    auto & g = start.graph();
    int k = start.k();
    for (std::size_t head = 0; head < nodes.size() && static_cast<long long>(head) < budget; ++head) {
        if (nodes[head].coloring == target) {
            Transcript t;
            for (int i = static_cast<int>(head); i > 0; i = nodes[i].parent)
                t.steps.push_back(nodes[i].step);
            std::reverse(t.steps.begin(), t.steps.end());
            return t;
        }
        auto current = nodes[head].coloring;
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
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
                    if (seen.insert(next.hash()).second)
                        nodes.push_back(Node{std::move(next), static_cast<int>(head), Step::swap(v, a, b)});
                }
            }
    }
    return std::nullopt;
}
