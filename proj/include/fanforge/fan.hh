#ifndef FANFORGE_GUARD_FAN_HH
#define FANFORGE_GUARD_FAN_HH 1

#include <fanforge/coloring.hh>
#include <fanforge/facts.hh>
#include <fanforge/verdict.hh>

#include <optional>
#include <string>
#include <vector>

namespace fanforge
{
    // Neighborhood bookkeeping at a light center r: the two max-degree
    // neighbors and the (delta-1)-neighbors s_1..s_q, q = d(r) - 2.
    struct FanContext
    {
        int center = -1;
        std::vector<int> delta_neighbors;
        std::vector<int> near_neighbors;

        auto q() const -> int { return static_cast<int>(near_neighbors.size()); }
    };

    // Returns nullopt unless r has exactly two max-degree neighbors and all
    // other neighbors have degree delta - 1.
    auto make_fan_context(const SimpleGraph & g, int r) -> std::optional<FanContext>;

    struct TypicalForm
    {
        int alpha = 1, beta = 1;
        std::vector<int> two_inducing;   // s_2..s_alpha
        std::vector<int> delta_inducing; // s_{alpha+1}..s_beta
    };

    enum class MaxStatus
    {
        unchecked,
        lower_bound,
        exact
    };

    auto to_string(MaxStatus s) -> std::string;

    struct Multifan
    {
        int center = -1;
        int uncolored_edge = -1;
        std::vector<int> sequence;    // s_1..s_p
        std::vector<int> edge_colors; // parallel to sequence; 0 for s_1
        std::vector<ColorSet> missing;
        std::optional<TypicalForm> typical;
        std::optional<FanContext> context;
        MaxStatus status = MaxStatus::unchecked;

        auto s1() const -> int { return sequence.front(); }
        auto p() const -> int { return static_cast<int>(sequence.size()); }
        auto vertex_count() const -> int { return p() + 1; }
        auto vertices() const -> std::vector<int>; // r, s_1, ..., s_p
        auto contains(int v) const -> bool;
    };

    // Greedy maximal multifan at `center` for the uncolored edge of phi.
    // Ties: lowest color, then lowest vertex id.
    auto grow_multifan(const PartialEdgeColoring & phi, int center) -> Multifan;

    // Builds the annotated fan for an explicit sequence; throws
    // PreconditionError if it violates (F1), distinctness or the degree rule.
    auto make_multifan(const PartialEdgeColoring & phi, int center, const std::vector<int> & sequence) -> Multifan;

    // Reason the sequence is not a multifan, or nullopt. s_1 is exempt from
    // the degree rule; s_2.. must not be max-degree vertices.
    auto multifan_violation(const PartialEdgeColoring & phi, int center, const std::vector<int> & sequence)
        -> std::optional<std::string>;

    auto typical_violation(const PartialEdgeColoring & phi, const Multifan & f) -> std::optional<std::string>;

    struct NormalizedFan
    {
        PartialEdgeColoring coloring;
        Multifan fan;
        std::vector<int> mapping; // mapping[old color] = new color
    };

    // Relabels colors and reorders the spokes into typical form. Needs a light
    // center, d(s_i) = delta - 1 for all i and an elementary V(F), except
    // that a fan already typical and elementary is returned unchanged.
    auto normalize_typical(const PartialEdgeColoring & phi, const Multifan & f) -> NormalizedFan;

    enum class SearchMode
    {
        exhaustive,
        reachability
    };

    struct MaximumFan
    {
        PartialEdgeColoring coloring;
        Multifan fan;
        MaxStatus status = MaxStatus::lower_bound;
        long long examined = 0;
        int upper_bound = 0;
    };

    // Largest |V(F)| any coloring can give: r, s_1 and every other neighbor
    // of r below max degree.
    auto multifan_size_bound(const SimpleGraph & g, int center, int s1) -> int;

    // Maximum multifan over colorings of G - e with delta colors.
    // Exhaustive mode enumerates colorings up to color permutation;
    // reachability mode runs a BFS over single Kempe changes from `start`.
    // The budget counts colorings examined.
    auto search_maximum_multifan(const GraphPtr & g, int e, int center, SearchMode mode, long long budget,
        const std::optional<PartialEdgeColoring> & start = std::nullopt) -> MaximumFan;

    struct InducingEntry
    {
        int color;                 // a color missing at some s_i
        int vertex;                // the s_i missing it
        int root;                  // the color of phi-bar(s_1) inducing it
        std::vector<int> sequence; // inducing sequence ending at vertex
    };

    // Every color of phi-bar(F - r) with its inducing color; needs V(F)
    // elementary.
    auto inducing_map(const PartialEdgeColoring & phi, const Multifan & f) -> std::vector<InducingEntry>;

    // Inducing root of color c, or 0 when c is not missing on F - r.
    auto inducing_root(const std::vector<InducingEntry> & map, int c) -> int;

    enum class Stability
    {
        none,
        v_f_minus_r,
        v_f,
        f_stable
    };

    auto to_string(Stability s) -> std::string;

    // Strongest stability label of phi_new with respect to phi_old and F.
    auto stability_class(const PartialEdgeColoring & phi_new, const PartialEdgeColoring & phi_old, const Multifan & f)
        -> Stability;

    struct KiersteadPath
    {
        std::vector<int> vertices; // v_0..v_p; v_0 v_1 is uncolored
        int uncolored_edge = -1;
    };

    auto kierstead_violation(const PartialEdgeColoring & phi, const std::vector<int> & vertices)
        -> std::optional<std::string>;

    // Greedy growth from v_0 under (K1), lowest color then lowest id.
    auto grow_kierstead_path(const PartialEdgeColoring & phi, int v0, int max_len) -> KiersteadPath;

    // All Kierstead paths with exactly `vertex_count` vertices starting at v0.
    auto all_kierstead_paths(const PartialEdgeColoring & phi, int v0, int vertex_count) -> std::vector<KiersteadPath>;

    // Multifan elementarity: every multifan for a critical edge of a class
    // two graph has an elementary vertex set.
    auto verify_fan_elementary(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict;

    // The three linkage statements around a multifan: r and s_i linked,
    // cross-inducer pairs linked, and same-inducer unlinked pairs have r on
    // the later vertex's chain.
    auto verify_fan_linkage(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict;

    // Four-vertex Kierstead paths (v0, v1, v2, v3) with min(d(v1), d(v2)) <
    // delta are elementary. A small v3 alone is not enough, see the
    // Petersen minus a vertex test.
    auto verify_kp_elementary(const GraphFacts & facts, const PartialEdgeColoring & phi, const KiersteadPath & k) -> Verdict;

    // Kempe changes at x off the fan that must preserve the fan: (1,g) for
    // every g, (g,delta) for 2-inducing g and (2,g) for delta-inducing g
    // when r is off the chain (F-stable), or on it (V(F)-stable).
    auto verify_stable_swaps(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f) -> Verdict;

    auto fan_hypotheses(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f)
        -> std::optional<std::string>;
}

#endif
