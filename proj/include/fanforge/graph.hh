#ifndef FANFORGE_GUARD_GRAPH_HH
#define FANFORGE_GUARD_GRAPH_HH 1

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fanforge
{
    struct Edge
    {
        int u, v; // u < v

        auto other(int w) const -> int { return w == u ? v : u; }
        auto operator==(const Edge &) const -> bool = default;
        auto operator<=>(const Edge &) const = default;
    };

    // Immutable simple graph on vertices 0..n-1. Edges are sorted by
    // (min endpoint, max endpoint) and their position is their id.
    class SimpleGraph
    {
    private:
        int _n = 0;
        std::vector<Edge> _edges;
        std::vector<std::vector<int>> _neighbors;
        std::vector<std::vector<int>> _incident; // parallel to _neighbors

    public:
        SimpleGraph() = default;

        // Throws PreconditionError on loops, parallel edges or bad ids.
        SimpleGraph(int n, const std::vector<std::pair<int, int>> & edges);

        auto order() const -> int { return _n; }
        auto size() const -> int { return static_cast<int>(_edges.size()); }
        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto edge(int e) const -> const Edge & { return _edges.at(e); }
        auto degree(int v) const -> int { return static_cast<int>(_neighbors[v].size()); }
        auto neighbors(int v) const -> std::span<const int> { return _neighbors[v]; }
        auto incident_edges(int v) const -> std::span<const int> { return _incident[v]; }
        auto max_degree() const -> int;
        auto edge_between(int u, int v) const -> std::optional<int>;
        auto adjacent(int u, int v) const -> bool { return edge_between(u, v).has_value(); }
        auto is_connected() const -> bool;
        auto has_isolated_vertex() const -> bool;

        auto operator==(const SimpleGraph & other) const -> bool
        {
            return _n == other._n && _edges == other._edges;
        }
    };

    struct DegreeProfile
    {
        std::vector<int> degrees;
        int delta = 0;
        std::vector<int> delta_vertices;
        int core_min_degree = 0; // over the subgraph induced by delta_vertices
        int core_max_degree = 0;
    };

    auto degree_profile(const SimpleGraph & g) -> DegreeProfile;

    auto is_core_acyclic(const SimpleGraph & g) -> bool;

    // Vertices adjacent to at most two max-degree vertices.
    auto light_vertices(const SimpleGraph & g) -> std::vector<int>;

    // N_k(v): neighbors of v with degree exactly k.
    auto neighbors_of_degree(const SimpleGraph & g, int v, int k) -> std::vector<int>;

    auto cycle(int n) -> SimpleGraph;
    auto path(int n) -> SimpleGraph;
    auto complete(int n) -> SimpleGraph;
    auto star(int leaves) -> SimpleGraph;
    auto petersen() -> SimpleGraph;

    // The last vertex takes over the deleted vertex's id.
    auto delete_vertex(const SimpleGraph & g, int v) -> SimpleGraph;

    // Vertex ids are kept; edge ids above e shift down by one.
    auto delete_edge(const SimpleGraph & g, int e) -> SimpleGraph;
}

#endif
