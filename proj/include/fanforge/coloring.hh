#ifndef FANFORGE_GUARD_COLORING_HH
#define FANFORGE_GUARD_COLORING_HH 1

#include <fanforge/color_set.hh>
#include <fanforge/graph.hh>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanforge
{
    using GraphPtr = std::shared_ptr<const SimpleGraph>;

    auto share(SimpleGraph g) -> GraphPtr;

    // Edge coloring with palette [1,k]; color 0 marks an uncolored edge.
    // Properness is not enforced on construction, see validate().
    class PartialEdgeColoring
    {
    private:
        GraphPtr _graph;
        int _k = 0;
        std::vector<int> _colors;
        std::vector<ColorSet> _missing;
        std::vector<int> _edge_at; // [v * (k + 1) + c] -> edge id or -1

        auto slot(int v, int c) const -> std::size_t { return static_cast<std::size_t>(v) * (_k + 1) + c; }
        auto attach(int e) -> void;
        auto detach(int e) -> void;

    public:
        PartialEdgeColoring() = default;

        // Throws PreconditionError for colors outside [0,k], k > 63 or more
        // than one uncolored edge.
        PartialEdgeColoring(GraphPtr graph, int k, std::vector<int> colors);

        auto graph() const -> const SimpleGraph & { return *_graph; }
        auto graph_ptr() const -> const GraphPtr & { return _graph; }
        auto k() const -> int { return _k; }
        auto colors() const -> const std::vector<int> & { return _colors; }
        auto color(int e) const -> int { return _colors[e]; }
        auto uncolored() const -> std::optional<int>;
        auto missing(int v) const -> ColorSet { return _missing[v]; }
        auto present(int v) const -> ColorSet;

        // The edge at v colored c, if any.
        auto edge_with(int v, int c) const -> std::optional<int>;
        auto neighbor_via(int v, int c) const -> std::optional<int>;

        // Recolors in place. Intended for operations that keep the coloring
        // proper once all of their steps are applied.
        auto set_color(int e, int c) -> void;

        auto hash() const -> std::uint64_t;

        auto operator==(const PartialEdgeColoring & other) const -> bool
        {
            return _k == other._k && _colors == other._colors &&
                (_graph == other._graph || *_graph == *other._graph);
        }
    };

    auto validate(const PartialEdgeColoring & phi) -> bool;

    // Description of the first violation, or nullopt when valid.
    auto validate_detail(const PartialEdgeColoring & phi) -> std::optional<std::string>;

    auto missing(const PartialEdgeColoring & phi, int v) -> ColorSet;
    auto present(const PartialEdgeColoring & phi, int v) -> ColorSet;
    auto missing_of(const PartialEdgeColoring & phi, const std::vector<int> & vertices) -> ColorSet;
    auto is_elementary(const PartialEdgeColoring & phi, const std::vector<int> & vertices) -> bool;

    enum class ChainKind
    {
        path,
        cycle
    };

    struct Chain
    {
        int alpha = 0, beta = 0;
        ChainKind kind = ChainKind::path;
        std::vector<int> vertices;
        std::vector<int> edges;
        std::uint64_t source_hash = 0;

        auto contains_vertex(int v) const -> bool;
        auto contains_edge(int e) const -> bool;
        auto is_path() const -> bool { return kind == ChainKind::path; }
        auto endpoints() const -> std::pair<int, int>;

        // Index of v in vertices, or -1.
        auto position(int v) const -> int;
    };

    // The (alpha, beta)-chain through v. Path chains are listed from the end
    // reached first when walking from v toward its lower-id chain neighbor;
    // cycles start at v and take that neighbor second.
    auto chain_at(const PartialEdgeColoring & phi, int v, int alpha, int beta) -> Chain;

    // True iff, walking the path chain from `from`, `first` comes before `second`.
    auto meets_before(const Chain & chain, int from, int first, int second) -> bool;

    auto kempe_swap(const PartialEdgeColoring & phi, const Chain & chain) -> PartialEdgeColoring;
    auto kempe_swap_in_place(PartialEdgeColoring & phi, const Chain & chain) -> void;

    // Swap on the chain through v.
    auto swap_at(const PartialEdgeColoring & phi, int v, int alpha, int beta) -> PartialEdgeColoring;

    auto are_linked(const PartialEdgeColoring & phi, int u, int v, int alpha, int beta) -> bool;

    auto double_swap_at(const PartialEdgeColoring & phi, int x, int alpha, int beta, int gamma) -> PartialEdgeColoring;

    // Applies a bijection on [1,k] given as mapping[c] for c in [1,k].
    auto relabel(const PartialEdgeColoring & phi, const std::vector<int> & mapping) -> PartialEdgeColoring;

    // "k; 0=c0,1=c1,...,u=_" with edge ids in order.
    auto serialize(const PartialEdgeColoring & phi) -> std::string;
    auto deserialize(GraphPtr graph, std::string_view text) -> PartialEdgeColoring;
}

#endif
