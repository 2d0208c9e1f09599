#include <fanforge/errors.hh>
#include <fanforge/solver.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

using namespace fanforge;

using std::function;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

auto fanforge::to_string(EdgeClass c) -> string
{
    return c == EdgeClass::one ? "one" : "two";
}

auto fanforge::to_string(Tri t) -> string
{
    switch (t) {
        case Tri::no: return "no";
        case Tri::yes: return "yes";
        case Tri::unknown: return "unknown";
    }
    return "unknown";
}

namespace
{
    auto palette_mask(int k) -> uint64_t
    {
        return k >= 63 ? ~uint64_t{1} : ((uint64_t{1} << (k + 1)) - 2);
    }

    // Backtracking over a static edge order with forward checking on the
    // edges adjacent to the one just colored, and a per-color matching bound.
    class EdgeSearch
    {
    private:
        const GraphPtr & _graph;
        const SimpleGraph & g;
        int k;
        uint64_t full;
        vector<int> order;
        vector<vector<int>> later; // later-ordered edges sharing an endpoint
        vector<uint64_t> present;
        vector<int> remaining; // uncolored edges still to place, per vertex
        vector<int> free_count; // per color: vertices with remaining > 0 missing it
        vector<int> colors;
        vector<char> placed;
        bool symmetry;
        long long budget;
        long long limit;
        const function<auto(const PartialEdgeColoring &)->bool> & visit;

        auto feasible_colors(int e) const -> uint64_t
        {
            auto & edge = g.edge(e);
            return full & ~(present[edge.u] | present[edge.v]);
        }

        auto adjust_vertex(int v, int delta_remaining) -> void
        {
            // keep free_count consistent when remaining[v] crosses zero
            bool before = remaining[v] > 0;
            remaining[v] += delta_remaining;
            bool after = remaining[v] > 0;
            if (before != after) {
                int sign = after ? 1 : -1;
                for (auto b = full & ~present[v]; b; b &= b - 1)
                    free_count[std::countr_zero(b)] += sign;
            }
        }

        auto assign(int e, int c) -> void
        {
            auto & edge = g.edge(e);
            for (int v : {edge.u, edge.v}) {
                if (remaining[v] > 0)
                    --free_count[c];
                present[v] |= uint64_t{1} << c;
                adjust_vertex(v, -1);
            }
            colors[e] = c;
            placed[e] = 1;
        }

        auto unassign(int e, int c) -> void
        {
            auto & edge = g.edge(e);
            for (int v : {edge.u, edge.v}) {
                adjust_vertex(v, +1);
                present[v] &= ~(uint64_t{1} << c);
                ++free_count[c];
            }
            colors[e] = 0;
            placed[e] = 0;
        }

        auto matching_bound_ok(int left) const -> bool
        {
            long total = 0;
            for (int c = 1; c <= k; ++c)
                total += free_count[c] / 2;
            return total >= left;
        }

        auto emit() -> bool
        {
            ++count;
            PartialEdgeColoring phi(_graph, k, colors);
            bool go_on = visit(phi);
            if (! go_on || count >= limit) {
                truncated = true;
                return false;
            }
            return true;
        }

        auto dfs(std::size_t pos, int max_used) -> bool
        {
            if (++nodes > budget) {
                truncated = true;
                out_of_budget = true;
                return false;
            }
            if (pos == order.size())
                return emit();
            if (! matching_bound_ok(static_cast<int>(order.size() - pos)))
                return true;

            int e = order[pos];
            uint64_t options = feasible_colors(e);
            if (symmetry && max_used + 1 < k)
                options &= (uint64_t{1} << (max_used + 2)) - 1;

            for (auto b = options; b; b &= b - 1) {
                int c = std::countr_zero(b);
                assign(e, c);
                bool dead = false;
                for (int f : later[pos])
                    if (! placed[f] && feasible_colors(f) == 0) {
                        dead = true;
                        break;
                    }
                bool go_on = dead || dfs(pos + 1, std::max(max_used, c));
                unassign(e, c);
                if (! go_on)
                    return false;
            }
            return true;
        }

    public:
        long long nodes = 0;
        long long count = 0;
        bool truncated = false;
        bool out_of_budget = false;

        EdgeSearch(const GraphPtr & graph, optional<int> skip, int k, const vector<int> & pinned, bool symmetry,
            bool alternate_order, long long budget, long long limit,
            const function<auto(const PartialEdgeColoring &)->bool> & visit) :
            _graph(graph),
            g(*graph),
            k(k),
            full(palette_mask(k)),
            present(graph->order(), 0),
            remaining(graph->order(), 0),
            free_count(k + 1, 0),
            colors(graph->size(), 0),
            placed(graph->size(), 0),
            symmetry(symmetry),
            budget(budget),
            limit(limit),
            visit(visit)
        {
            if (k < 0 || k > max_colors)
                throw PreconditionError("palette size must be in [0, 63]");
            if (! pinned.empty() && static_cast<int>(pinned.size()) != g.size())
                throw PreconditionError("pinned colors must cover every edge");

            for (int e = 0; e < g.size(); ++e)
                if (e != skip && (pinned.empty() || pinned[e] == 0))
                    order.push_back(e);

            auto weight = [&](int e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
            if (alternate_order)
                std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                    return weight(a) != weight(b) ? weight(a) < weight(b) : a > b;
                });
            else
                std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                    return weight(a) != weight(b) ? weight(a) > weight(b) : a < b;
                });

            for (int e : order) {
                ++remaining[g.edge(e).u];
                ++remaining[g.edge(e).v];
            }
            for (int v = 0; v < g.order(); ++v)
                if (remaining[v] > 0)
                    for (int c = 1; c <= k; ++c)
                        ++free_count[c];

            if (! pinned.empty())
                for (int e = 0; e < g.size(); ++e)
                    if (e != skip && pinned[e] != 0) {
                        int c = pinned[e];
                        auto & edge = g.edge(e);
                        if (c < 1 || c > k || ((present[edge.u] | present[edge.v]) >> c & 1))
                            throw PreconditionError("pinned colors are not a proper partial coloring");
                        for (int v : {edge.u, edge.v}) {
                            if (remaining[v] > 0)
                                --free_count[c];
                            present[v] |= uint64_t{1} << c;
                        }
                        colors[e] = c;
                        placed[e] = 1;
                    }

            vector<int> position(g.size(), -1);
            for (std::size_t i = 0; i < order.size(); ++i)
                position[order[i]] = static_cast<int>(i);
            later.resize(order.size());
            for (std::size_t i = 0; i < order.size(); ++i) {
                auto & edge = g.edge(order[i]);
                for (int v : {edge.u, edge.v})
                    for (int f : g.incident_edges(v))
                        if (position[f] > static_cast<int>(i))
                            later[i].push_back(f);
            }
        }

        auto run() -> void
        {
            // infeasible before search: an edge with no free color
            for (int e : order)
                if (feasible_colors(e) == 0)
                    return;
            dfs(0, 0);
        }
    };
}

auto fanforge::find_coloring(const GraphPtr & g, int k, optional<int> skip, long long budget, bool alternate_order) -> SearchOutcome
{
    SearchOutcome outcome;
    function<auto(const PartialEdgeColoring &)->bool> keep = [&](const PartialEdgeColoring & phi) {
        outcome.coloring = phi;
        return false;
    };
    EdgeSearch search(g, skip, k, {}, true, alternate_order, budget, 1, keep);
    search.run();
    outcome.nodes = search.nodes;
    if (outcome.coloring)
        outcome.result = SearchResult::found;
    else if (search.out_of_budget)
        outcome.result = SearchResult::budget;
    else
        outcome.result = SearchResult::exhausted;
    return outcome;
}

auto fanforge::for_each_coloring(const GraphPtr & g, optional<int> e, int k, const EnumerationOptions & options,
    const function<auto(const PartialEdgeColoring &)->bool> & visit) -> EnumerationSummary
{
    if (options.up_to_color_permutation && ! options.pinned.empty())
        for (int c : options.pinned)
            if (c != 0)
                throw PreconditionError("color symmetry breaking is invalid with pinned edges");
    if (k < g->max_degree() - 1)
        throw PreconditionError("palette smaller than the maximum degree");
    EdgeSearch search(g, e, k, options.pinned, options.up_to_color_permutation, false, options.budget,
        options.limit, visit);
    search.run();
    return EnumerationSummary{search.count, search.truncated, search.nodes};
}

auto fanforge::enumerate_colorings(const GraphPtr & g, optional<int> e, int k, long long limit) -> Enumeration
{
    Enumeration result;
    EnumerationOptions options;
    options.limit = limit;
    auto summary = for_each_coloring(g, e, k, options, [&](const PartialEdgeColoring & phi) {
        result.colorings.push_back(phi);
        return true;
    });
    result.truncated = summary.truncated;
    return result;
}

auto fanforge::misra_gries(const GraphPtr & graph) -> PartialEdgeColoring
{
    auto & g = *graph;
    int k = g.max_degree() + 1;
    // The coloring type allows a single uncolored edge, so work on raw
    // arrays and wrap the result at the end.
    vector<int> col(g.size(), 0);
    vector<vector<int>> at(g.order(), vector<int>(k + 1, -1));

    auto set = [&](int e, int c) {
        auto & edge = g.edge(e);
        if (col[e] != 0) {
            at[edge.u][col[e]] = -1;
            at[edge.v][col[e]] = -1;
        }
        col[e] = c;
        if (c != 0) {
            at[edge.u][c] = e;
            at[edge.v][c] = e;
        }
    };
    auto free_at = [&](int v, int c) { return at[v][c] == -1; };
    auto lowest_free = [&](int v) {
        for (int c = 1; c <= k; ++c)
            if (free_at(v, c))
                return c;
        throw std::logic_error("misra_gries: no free color");
    };

    for (int e = 0; e < g.size(); ++e) {
        int u = g.edge(e).u;
        vector<int> fan{g.edge(e).v};
        vector<char> in_fan(g.order(), 0);
        in_fan[fan[0]] = 1;
        while (true) {
            int last = fan.back();
            int best_color = 0, best_vertex = -1;
            for (int w : g.neighbors(u)) {
                int f = *g.edge_between(u, w);
                if (in_fan[w] || col[f] == 0 || ! free_at(last, col[f]))
                    continue;
                if (best_vertex == -1 || col[f] < best_color)
                    best_color = col[f], best_vertex = w;
            }
            if (best_vertex == -1)
                break;
            fan.push_back(best_vertex);
            in_fan[best_vertex] = 1;
        }

        int c = lowest_free(u), d = lowest_free(fan.back());
        if (c != d && ! free_at(u, d)) {
            // invert the cd-path that starts at u with its d-edge
            vector<int> path;
            int v = u, want = d;
            while (at[v][want] != -1) {
                int f = at[v][want];
                path.push_back(f);
                v = g.edge(f).other(v);
                want = want == d ? c : d;
            }
            vector<int> old;
            for (int f : path)
                old.push_back(col[f]);
            for (int f : path)
                set(f, 0);
            for (std::size_t i = 0; i < path.size(); ++i)
                set(path[i], old[i] == c ? d : c);
        }

        auto prefix_is_fan = [&](std::size_t w) {
            for (std::size_t j = 0; j < w; ++j) {
                int f = *g.edge_between(u, fan[j + 1]);
                if (col[f] == 0 || ! free_at(fan[j], col[f]))
                    return false;
            }
            return true;
        };
        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i)
            if (free_at(fan[i], d) && prefix_is_fan(i)) {
                w = i;
                break;
            }
        if (w == fan.size())
            throw std::logic_error("misra_gries: no rotatable fan prefix");

        vector<int> shifted;
        for (std::size_t j = 0; j < w; ++j)
            shifted.push_back(col[*g.edge_between(u, fan[j + 1])]);
        for (std::size_t j = 1; j <= w; ++j)
            set(*g.edge_between(u, fan[j]), 0);
        for (std::size_t j = 0; j < w; ++j)
            set(*g.edge_between(u, fan[j]), shifted[j]);
        set(*g.edge_between(u, fan[w]), d);
    }

    return PartialEdgeColoring(graph, k, col);
}

auto fanforge::is_overfull(const SimpleGraph & g) -> bool
{
    long long m = g.size(), delta = g.max_degree(), half = g.order() / 2;
    return m > delta * half;
}

auto fanforge::is_just_overfull(const SimpleGraph & g) -> bool
{
    long long m = g.size(), delta = g.max_degree(), half = g.order() / 2;
    return m == delta * half + 1;
}

auto fanforge::overfull_deficiency(const SimpleGraph & g) -> long long
{
    if (g.order() % 2 == 0)
        throw PreconditionError("overfull deficiency is defined for odd order only");
    long long n = g.order(), delta = g.max_degree(), m = g.size();
    return (n - 1) * delta + 2 - 2 * m;
}

auto fanforge::chromatic_index(const GraphPtr & g, const SolverOptions & options) -> ClassVerdict
{
    ClassVerdict verdict;
    verdict.delta = g->max_degree();
    verdict.core_acyclic = is_core_acyclic(*g);

    if (g->size() == 0) {
        verdict.exact = true;
        verdict.chi_prime = 0;
        verdict.edge_class = EdgeClass::one;
        verdict.witness = PartialEdgeColoring(g, 0, {});
        return verdict;
    }

    auto class_two = [&] {
        verdict.exact = true;
        verdict.chi_prime = verdict.delta + 1;
        verdict.edge_class = EdgeClass::two;
        verdict.witness = misra_gries(g);
    };

    if (options.use_overfull_shortcut && g->order() >= 2 && is_overfull(*g)) {
        verdict.decided_by_overfull = true;
        class_two();
        return verdict;
    }

    auto outcome = find_coloring(g, verdict.delta, std::nullopt, options.budget, options.alternate_order);
    verdict.nodes = outcome.nodes;
    switch (outcome.result) {
        case SearchResult::found:
            verdict.exact = true;
            verdict.chi_prime = verdict.delta;
            verdict.edge_class = EdgeClass::one;
            verdict.witness = outcome.coloring;
            break;
        case SearchResult::exhausted:
            if (verdict.core_acyclic)
                throw std::logic_error("search refuted a class-one graph with acyclic core");
            class_two();
            break;
        case SearchResult::budget:
            verdict.exact = false;
            break;
    }
    return verdict;
}

auto fanforge::is_critical_edge(const GraphPtr & g, int e, const SolverOptions & options) -> Tri
{
    auto verdict = chromatic_index(g, options);
    if (! verdict.exact)
        return Tri::unknown;
    auto minus = share(delete_edge(*g, e));
    int target = verdict.chi_prime - 1;
    if (minus->max_degree() > target)
        return Tri::no;
    if (minus->max_degree() < target)
        return Tri::yes; // Vizing: chi'(G - e) <= max degree + 1 <= target
    auto sub = chromatic_index(minus, options);
    if (! sub.exact)
        return Tri::unknown;
    return sub.chi_prime < verdict.chi_prime ? Tri::yes : Tri::no;
}

auto fanforge::analyse_criticality(const GraphPtr & g, const SolverOptions & options) -> CriticalityReport
{
    CriticalityReport report;
    report.verdict = chromatic_index(g, options);
    if (! report.verdict.exact) {
        report.delta_critical = Tri::unknown;
        return report;
    }
    if (report.verdict.edge_class == EdgeClass::one) {
        // chi'(G - e) < delta needs e to touch every max-degree vertex
        for (int e = 0; e < g->size(); ++e) {
            auto minus = share(delete_edge(*g, e));
            if (minus->max_degree() == report.verdict.delta)
                report.critical_edges.push_back(Tri::no);
            else {
                auto sub = chromatic_index(minus, options);
                report.critical_edges.push_back(! sub.exact ? Tri::unknown
                        : sub.chi_prime < report.verdict.chi_prime ? Tri::yes : Tri::no);
            }
        }
        report.delta_critical = Tri::no;
        return report;
    }

    int delta = report.verdict.delta;
    bool any_unknown = false, all_critical = true;
    for (int e = 0; e < g->size(); ++e) {
        // For class two, e is critical iff G - e is delta-colorable.
        auto outcome = find_coloring(g, delta, e, options.budget, options.alternate_order);
        Tri t = outcome.result == SearchResult::found ? Tri::yes
            : outcome.result == SearchResult::exhausted ? Tri::no : Tri::unknown;
        report.critical_edges.push_back(t);
        any_unknown = any_unknown || t == Tri::unknown;
        all_critical = all_critical && t == Tri::yes;
    }

    if (g->has_isolated_vertex()) {
        report.note = "isolated vertex: deleting it leaves a proper subgraph with the same chromatic index";
        report.delta_critical = Tri::no;
    }
    else if (! all_critical)
        report.delta_critical = any_unknown ? Tri::unknown : Tri::no;
    else
        report.delta_critical = Tri::yes;
    return report;
}

auto fanforge::is_delta_critical(const GraphPtr & g, const SolverOptions & options) -> Tri
{
    return analyse_criticality(g, options).delta_critical;
}

auto fanforge::parity_check(const PartialEdgeColoring & phi) -> ParityReport
{
    if (phi.uncolored())
        throw PreconditionError("parity check needs a complete coloring");
    ParityReport report;
    report.missing_counts.assign(phi.k() + 1, 0);
    for (int v = 0; v < phi.graph().order(); ++v)
        for (int c : phi.missing(v).to_vector())
            ++report.missing_counts[c];
    for (int c = 1; c <= phi.k(); ++c)
        if (report.missing_counts[c] % 2 != phi.graph().order() % 2)
            report.violating_colors.push_back(c);
    return report;
}
