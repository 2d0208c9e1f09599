#include <fanforge/errors.hh>
#include <fanforge/graph.hh>

#include <algorithm>
#include <string>

using namespace fanforge;

using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

SimpleGraph::SimpleGraph(int n, const vector<pair<int, int>> & edges) :
    _n(n),
    _neighbors(n),
    _incident(n)
{
    if (n < 0)
        throw PreconditionError("negative vertex count");

    _edges.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw PreconditionError("edge endpoint out of range: " + to_string(a) + "-" + to_string(b));
        if (a == b)
            throw PreconditionError("loop at vertex " + to_string(a));
        _edges.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(_edges.begin(), _edges.end());
    if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
        throw PreconditionError("parallel edges");

    for (int e = 0; e < size(); ++e) {
        _neighbors[_edges[e].u].push_back(_edges[e].v);
        _neighbors[_edges[e].v].push_back(_edges[e].u);
    }
    for (int v = 0; v < n; ++v)
        std::sort(_neighbors[v].begin(), _neighbors[v].end());
    for (int v = 0; v < n; ++v)
        for (int w : _neighbors[v])
            _incident[v].push_back(*edge_between(v, w));
}

auto SimpleGraph::max_degree() const -> int
{
    int result = 0;
    for (int v = 0; v < _n; ++v)
        result = std::max(result, degree(v));
    return result;
}

auto SimpleGraph::edge_between(int u, int v) const -> optional<int>
{
    if (u == v || u < 0 || v < 0 || u >= _n || v >= _n)
        return std::nullopt;
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(_edges.begin(), _edges.end(), key);
    if (it == _edges.end() || *it != key)
        return std::nullopt;
    return static_cast<int>(it - _edges.begin());
}

auto SimpleGraph::is_connected() const -> bool
{
    if (_n == 0)
        return true;
    vector<char> seen(_n, 0);
    vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : _neighbors[v])
            if (! seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == _n;
}

auto SimpleGraph::has_isolated_vertex() const -> bool
{
    for (int v = 0; v < _n; ++v)
        if (degree(v) == 0)
            return true;
    return false;
}

auto fanforge::degree_profile(const SimpleGraph & g) -> DegreeProfile
{
    DegreeProfile result;
    result.delta = g.max_degree();
    for (int v = 0; v < g.order(); ++v) {
        result.degrees.push_back(g.degree(v));
        if (g.degree(v) == result.delta)
            result.delta_vertices.push_back(v);
    }

    bool first = true;
    for (int v : result.delta_vertices) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == result.delta)
                ++d;
        if (first || d < result.core_min_degree)
            result.core_min_degree = d;
        if (first || d > result.core_max_degree)
            result.core_max_degree = d;
        first = false;
    }
    return result;
}

auto fanforge::is_core_acyclic(const SimpleGraph & g) -> bool
{
    // A graph is a forest iff |E| = |V| - components.
    int delta = g.max_degree();
    vector<int> parent(g.order());
    for (int v = 0; v < g.order(); ++v)
        parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };

    for (auto & e : g.edges()) {
        if (g.degree(e.u) != delta || g.degree(e.v) != delta)
            continue;
        int a = find(e.u), b = find(e.v);
        if (a == b)
            return false;
        parent[a] = b;
    }
    return true;
}

auto fanforge::light_vertices(const SimpleGraph & g) -> vector<int>
{
    int delta = g.max_degree();
    vector<int> result;
    for (int v = 0; v < g.order(); ++v) {
        int count = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == delta)
                ++count;
        if (count <= 2)
            result.push_back(v);
    }
    return result;
}

auto fanforge::neighbors_of_degree(const SimpleGraph & g, int v, int k) -> vector<int>
{
    vector<int> result;
    for (int w : g.neighbors(v))
        if (g.degree(w) == k)
            result.push_back(w);
    return result;
}

auto fanforge::cycle(int n) -> SimpleGraph
{
    if (n < 3)
        throw PreconditionError("cycle needs at least 3 vertices");
    vector<pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, edges);
}

auto fanforge::path(int n) -> SimpleGraph
{
    if (n < 1)
        throw PreconditionError("path needs at least 1 vertex");
    vector<pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return SimpleGraph(n, edges);
}

auto fanforge::complete(int n) -> SimpleGraph
{
    if (n < 1)
        throw PreconditionError("complete graph needs at least 1 vertex");
    vector<pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return SimpleGraph(n, edges);
}

auto fanforge::star(int leaves) -> SimpleGraph
{
    vector<pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return SimpleGraph(leaves + 1, edges);
}

auto fanforge::petersen() -> SimpleGraph
{
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    vector<pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return SimpleGraph(10, edges);
}

auto fanforge::delete_vertex(const SimpleGraph & g, int v) -> SimpleGraph
{
    if (v < 0 || v >= g.order())
        throw PreconditionError("vertex id out of range: " + to_string(v));
    int last = g.order() - 1;
    auto relabel = [&](int w) { return w == last ? v : w; };
    vector<pair<int, int>> edges;
    for (auto & e : g.edges())
        if (e.u != v && e.v != v)
            edges.emplace_back(relabel(e.u), relabel(e.v));
    return SimpleGraph(last, edges);
}

auto fanforge::delete_edge(const SimpleGraph & g, int e) -> SimpleGraph
{
    if (e < 0 || e >= g.size())
        throw PreconditionError("edge id out of range: " + to_string(e));
    vector<pair<int, int>> edges;
    for (int f = 0; f < g.size(); ++f)
        if (f != e)
            edges.emplace_back(g.edge(f).u, g.edge(f).v);
    return SimpleGraph(g.order(), edges);
}
