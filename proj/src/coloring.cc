#include <fanforge/coloring.hh>
#include <fanforge/errors.hh>

#include <algorithm>
#include <charconv>

using namespace fanforge;

using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

auto fanforge::share(SimpleGraph g) -> GraphPtr
{
    return std::make_shared<const SimpleGraph>(std::move(g));
}

PartialEdgeColoring::PartialEdgeColoring(GraphPtr graph, int k, vector<int> colors) :
    _graph(std::move(graph)),
    _k(k),
    _colors(std::move(colors))
{
    if (! _graph)
        throw PreconditionError("coloring needs a graph");
    if (k < 0 || k > max_colors)
        throw PreconditionError("palette size must be in [0, 63]");
    if (static_cast<int>(_colors.size()) != _graph->size())
        throw PreconditionError("coloring has " + to_string(_colors.size()) + " entries for " + to_string(_graph->size()) + " edges");

    int uncolored_count = 0;
    for (int c : _colors) {
        if (c < 0 || c > k)
            throw PreconditionError("color " + to_string(c) + " outside [1," + to_string(k) + "]");
        if (c == 0)
            ++uncolored_count;
    }
    if (uncolored_count > 1)
        throw PreconditionError("more than one uncolored edge");

    _missing.assign(_graph->order(), ColorSet::range(1, k));
    _edge_at.assign(static_cast<std::size_t>(_graph->order()) * (k + 1), -1);
    for (int e = 0; e < _graph->size(); ++e)
        if (_colors[e] != 0)
            attach(e);
}

auto PartialEdgeColoring::attach(int e) -> void
{
    auto & edge = _graph->edge(e);
    int c = _colors[e];
    for (int v : {edge.u, edge.v}) {
        _missing[v].erase(c);
        if (_edge_at[slot(v, c)] == -1)
            _edge_at[slot(v, c)] = e;
    }
}

auto PartialEdgeColoring::detach(int e) -> void
{
    auto & edge = _graph->edge(e);
    int c = _colors[e];
    for (int v : {edge.u, edge.v}) {
        if (_edge_at[slot(v, c)] == e) {
            _edge_at[slot(v, c)] = -1;
            // an improper coloring may have a second edge with this color here
            for (int f : _graph->incident_edges(v))
                if (f != e && _colors[f] == c)
                    _edge_at[slot(v, c)] = f;
        }
        if (_edge_at[slot(v, c)] == -1)
            _missing[v].insert(c);
    }
}

auto PartialEdgeColoring::uncolored() const -> optional<int>
{
    for (int e = 0; e < static_cast<int>(_colors.size()); ++e)
        if (_colors[e] == 0)
            return e;
    return std::nullopt;
}

auto PartialEdgeColoring::present(int v) const -> ColorSet
{
    return ColorSet::range(1, _k) - _missing[v];
}

auto PartialEdgeColoring::edge_with(int v, int c) const -> optional<int>
{
    if (c < 1 || c > _k)
        return std::nullopt;
    int e = _edge_at[slot(v, c)];
    if (e < 0)
        return std::nullopt;
    return e;
}

auto PartialEdgeColoring::neighbor_via(int v, int c) const -> optional<int>
{
    auto e = edge_with(v, c);
    if (! e)
        return std::nullopt;
    return _graph->edge(*e).other(v);
}

auto PartialEdgeColoring::set_color(int e, int c) -> void
{
    if (c < 0 || c > _k)
        throw PreconditionError("color " + to_string(c) + " outside [1," + to_string(_k) + "]");
    if (_colors[e] == c)
        return;
    if (_colors[e] != 0)
        detach(e);
    _colors[e] = c;
    if (c != 0)
        attach(e);
}

auto PartialEdgeColoring::hash() const -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(_k);
    for (int c : _colors) {
        h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    return h;
}

auto fanforge::validate_detail(const PartialEdgeColoring & phi) -> optional<string>
{
    auto & g = phi.graph();
    int uncolored_count = 0;
    for (int e = 0; e < g.size(); ++e)
        if (phi.color(e) == 0)
            ++uncolored_count;
    if (uncolored_count > 1)
        return "more than one uncolored edge";

    for (int v = 0; v < g.order(); ++v) {
        ColorSet seen;
        for (int e : g.incident_edges(v)) {
            int c = phi.color(e);
            if (c == 0)
                continue;
            if (seen.contains(c))
                return "vertex " + to_string(v) + " has two edges colored " + to_string(c);
            seen.insert(c);
        }
        if (phi.missing(v) != ColorSet::range(1, phi.k()) - seen)
            return "stale missing set at vertex " + to_string(v);
        for (int c = 1; c <= phi.k(); ++c) {
            auto e = phi.edge_with(v, c);
            if (e.has_value() != seen.contains(c) || (e && phi.color(*e) != c))
                return "stale edge index at vertex " + to_string(v);
        }
    }
    return std::nullopt;
}

auto fanforge::validate(const PartialEdgeColoring & phi) -> bool
{
    return ! validate_detail(phi).has_value();
}

auto fanforge::missing(const PartialEdgeColoring & phi, int v) -> ColorSet
{
    return phi.missing(v);
}

auto fanforge::present(const PartialEdgeColoring & phi, int v) -> ColorSet
{
    return phi.present(v);
}

auto fanforge::missing_of(const PartialEdgeColoring & phi, const vector<int> & vertices) -> ColorSet
{
    ColorSet result;
    for (int v : vertices)
        result |= phi.missing(v);
    return result;
}

auto fanforge::is_elementary(const PartialEdgeColoring & phi, const vector<int> & vertices) -> bool
{
    ColorSet seen;
    for (int v : vertices) {
        if (seen.intersects(phi.missing(v)))
            return false;
        seen |= phi.missing(v);
    }
    return true;
}

auto Chain::contains_vertex(int v) const -> bool
{
    return position(v) >= 0;
}

auto Chain::contains_edge(int e) const -> bool
{
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

auto Chain::endpoints() const -> pair<int, int>
{
    return {vertices.front(), vertices.back()};
}

auto Chain::position(int v) const -> int
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

namespace
{
    // Colors in {alpha, beta} present at v, each with its edge.
    auto chain_steps(const PartialEdgeColoring & phi, int v, int alpha, int beta) -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result; // (neighbor, edge)
        for (int c : {alpha, beta})
            if (auto e = phi.edge_with(v, c))
                result.emplace_back(phi.graph().edge(*e).other(v), *e);
        std::sort(result.begin(), result.end());
        return result;
    }

    // Walks from `start` leaving along `first_edge` until the path ends or
    // returns to `start`. Appends visited vertices and edges.
    auto walk(const PartialEdgeColoring & phi, int start, int first_edge, int alpha, int beta,
        vector<int> & vertices, vector<int> & edges) -> bool
    {
        int prev_edge = first_edge;
        int v = phi.graph().edge(first_edge).other(start);
        edges.push_back(first_edge);
        while (v != start) {
            vertices.push_back(v);
            int c = phi.color(prev_edge) == alpha ? beta : alpha;
            auto next = phi.edge_with(v, c);
            if (! next)
                return false;
            edges.push_back(*next);
            prev_edge = *next;
            v = phi.graph().edge(*next).other(v);
        }
        return true;
    }
}

auto fanforge::chain_at(const PartialEdgeColoring & phi, int v, int alpha, int beta) -> Chain
{
    if (alpha == beta || alpha < 1 || beta < 1 || alpha > phi.k() || beta > phi.k())
        throw PreconditionError("chain colors must be distinct and in the palette");

    Chain chain;
    chain.alpha = std::min(alpha, beta);
    chain.beta = std::max(alpha, beta);
    chain.source_hash = phi.hash();

    auto steps = chain_steps(phi, v, alpha, beta);
    if (steps.empty()) {
        chain.vertices.push_back(v);
        return chain;
    }

    vector<int> fwd_vertices, fwd_edges;
    if (walk(phi, v, steps[0].second, alpha, beta, fwd_vertices, fwd_edges)) {
        chain.kind = ChainKind::cycle;
        chain.vertices.push_back(v);
        chain.vertices.insert(chain.vertices.end(), fwd_vertices.begin(), fwd_vertices.end());
        chain.edges = fwd_edges;
        return chain;
    }

    // path: fwd part runs from v toward the lower-id neighbor's end
    vector<int> back_vertices, back_edges;
    if (steps.size() == 2)
        walk(phi, v, steps[1].second, alpha, beta, back_vertices, back_edges);

    chain.vertices.assign(fwd_vertices.rbegin(), fwd_vertices.rend());
    chain.edges.assign(fwd_edges.rbegin(), fwd_edges.rend());
    chain.vertices.push_back(v);
    chain.vertices.insert(chain.vertices.end(), back_vertices.begin(), back_vertices.end());
    chain.edges.insert(chain.edges.end(), back_edges.begin(), back_edges.end());
    return chain;
}

auto fanforge::meets_before(const Chain & chain, int from, int first, int second) -> bool
{
    int a = chain.position(from), b = chain.position(first), c = chain.position(second);
    if (a < 0 || b < 0 || c < 0)
        throw PreconditionError("meets_before: vertex not on chain");
    return std::abs(b - a) < std::abs(c - a) && ((b - a) * (c - a) >= 0);
}

auto fanforge::kempe_swap_in_place(PartialEdgeColoring & phi, const Chain & chain) -> void
{
    if (chain.source_hash != phi.hash())
        throw StaleChainError("chain was extracted from a different coloring");
    for (int e : chain.edges)
        if (phi.color(e) != chain.alpha && phi.color(e) != chain.beta)
            throw StaleChainError("chain edge changed color");

    // Clear first so no intermediate state double-books a color at a vertex.
    vector<int> old(chain.edges.size());
    for (std::size_t i = 0; i < chain.edges.size(); ++i) {
        old[i] = phi.color(chain.edges[i]);
        phi.set_color(chain.edges[i], 0);
    }
    for (std::size_t i = 0; i < chain.edges.size(); ++i)
        phi.set_color(chain.edges[i], old[i] == chain.alpha ? chain.beta : chain.alpha);
}

auto fanforge::kempe_swap(const PartialEdgeColoring & phi, const Chain & chain) -> PartialEdgeColoring
{
    auto result = phi;
    kempe_swap_in_place(result, chain);
    return result;
}

auto fanforge::swap_at(const PartialEdgeColoring & phi, int v, int alpha, int beta) -> PartialEdgeColoring
{
    return kempe_swap(phi, chain_at(phi, v, alpha, beta));
}

auto fanforge::are_linked(const PartialEdgeColoring & phi, int u, int v, int alpha, int beta) -> bool
{
    auto both = ColorSet::of({alpha, beta});
    if (! phi.missing(u).intersects(both) || ! phi.missing(v).intersects(both))
        throw PreconditionError("are_linked: vertex has both colors present");
    if (u == v)
        return true;
    auto chain = chain_at(phi, u, alpha, beta);
    return chain.is_path() && chain.contains_vertex(v);
}

auto fanforge::double_swap_at(const PartialEdgeColoring & phi, int x, int alpha, int beta, int gamma) -> PartialEdgeColoring
{
    if (alpha == beta)
        return phi;
    if (! phi.missing(x).contains(alpha) || ! phi.present(x).contains(beta) || ! phi.present(x).contains(gamma))
        throw PreconditionError("double swap needs alpha missing and beta, gamma present at x");
    auto mid = swap_at(phi, x, alpha, beta);
    return swap_at(mid, x, beta, gamma);
}

auto fanforge::relabel(const PartialEdgeColoring & phi, const vector<int> & mapping) -> PartialEdgeColoring
{
    if (static_cast<int>(mapping.size()) != phi.k() + 1)
        throw PreconditionError("relabel mapping must have k + 1 entries");
    ColorSet image;
    for (int c = 1; c <= phi.k(); ++c) {
        if (mapping[c] < 1 || mapping[c] > phi.k() || image.contains(mapping[c]))
            throw PreconditionError("relabel mapping is not a bijection on the palette");
        image.insert(mapping[c]);
    }
    vector<int> colors(phi.colors().size());
    for (std::size_t e = 0; e < colors.size(); ++e)
        colors[e] = phi.color(static_cast<int>(e)) == 0 ? 0 : mapping[phi.color(static_cast<int>(e))];
    return PartialEdgeColoring(phi.graph_ptr(), phi.k(), std::move(colors));
}

auto fanforge::serialize(const PartialEdgeColoring & phi) -> string
{
    string result = to_string(phi.k()) + ";";
    for (int e = 0; e < phi.graph().size(); ++e) {
        result += e == 0 ? " " : ",";
        result += to_string(e) + "=" + (phi.color(e) == 0 ? string("_") : to_string(phi.color(e)));
    }
    return result;
}

auto fanforge::deserialize(GraphPtr graph, string_view text) -> PartialEdgeColoring
{
    auto parse_int = [&](string_view s) {
        while (! s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (! s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ParseError("bad integer in coloring: '" + string(s) + "'");
        return value;
    };

    auto semi = text.find(';');
    if (semi == string_view::npos)
        throw ParseError("coloring lacks 'k;' prefix");
    int k = parse_int(text.substr(0, semi));
    vector<int> colors(graph->size(), -1);
    string_view rest = text.substr(semi + 1);
    while (! rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        rest = comma == string_view::npos ? string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == string_view::npos)
            throw ParseError("coloring entry lacks '='");
        int e = parse_int(item.substr(0, eq));
        auto value = item.substr(eq + 1);
        while (! value.empty() && value.front() == ' ')
            value.remove_prefix(1);
        if (e < 0 || e >= graph->size() || colors[e] != -1)
            throw ParseError("bad or repeated edge id " + to_string(e));
        colors[e] = value == "_" ? 0 : parse_int(value);
    }
    for (int c : colors)
        if (c == -1)
            throw ParseError("coloring does not cover every edge");
    return PartialEdgeColoring(std::move(graph), k, std::move(colors));
}
