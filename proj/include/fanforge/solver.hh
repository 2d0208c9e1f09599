#ifndef FANFORGE_GUARD_SOLVER_HH
#define FANFORGE_GUARD_SOLVER_HH 1

#include <fanforge/coloring.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fanforge
{
    inline constexpr long long default_node_budget = 100'000'000;

    enum class EdgeClass
    {
        one,
        two
    };

    enum class Tri
    {
        no,
        yes,
        unknown
    };

    auto to_string(EdgeClass c) -> std::string;
    auto to_string(Tri t) -> std::string;

    struct SolverOptions
    {
        long long budget = default_node_budget;
        bool use_overfull_shortcut = true;
        // Ascending degree-sum order with descending id ties; used for
        // independent re-checks of suspicious verdicts.
        bool alternate_order = false;
    };

    struct ClassVerdict
    {
        bool exact = false; // false: node budget ran out before a decision
        int delta = 0;
        int chi_prime = 0;
        EdgeClass edge_class = EdgeClass::one;
        std::optional<PartialEdgeColoring> witness;
        long long nodes = 0;
        bool decided_by_overfull = false;
        bool core_acyclic = false;
    };

    auto chromatic_index(const GraphPtr & g, const SolverOptions & options = {}) -> ClassVerdict;

    enum class SearchResult
    {
        found,
        exhausted,
        budget
    };

    struct SearchOutcome
    {
        SearchResult result = SearchResult::exhausted;
        std::optional<PartialEdgeColoring> coloring;
        long long nodes = 0;
    };

    // Proper k-coloring of every edge except `skip` (left uncolored).
    auto find_coloring(const GraphPtr & g, int k, std::optional<int> skip, long long budget,
        bool alternate_order = false) -> SearchOutcome;

    // Vizing's theorem made constructive: a proper (max degree + 1)-coloring.
    auto misra_gries(const GraphPtr & g) -> PartialEdgeColoring;

    auto is_overfull(const SimpleGraph & g) -> bool;
    auto is_just_overfull(const SimpleGraph & g) -> bool;

    // (n-1) * delta + 2 - 2|E|; requires odd n.
    auto overfull_deficiency(const SimpleGraph & g) -> long long;

    auto is_critical_edge(const GraphPtr & g, int e, const SolverOptions & options = {}) -> Tri;

    struct CriticalityReport
    {
        ClassVerdict verdict;
        std::vector<Tri> critical_edges;
        Tri delta_critical = Tri::no;
        std::string note;
    };

    // Delta-critical: class two, no isolated vertex (deleting one would be a
    // proper subgraph of the same index) and every edge critical.
    auto analyse_criticality(const GraphPtr & g, const SolverOptions & options = {}) -> CriticalityReport;
    auto is_delta_critical(const GraphPtr & g, const SolverOptions & options = {}) -> Tri;

    struct ParityReport
    {
        std::vector<int> missing_counts; // index by color, entry 0 unused
        std::vector<int> violating_colors;

        auto ok() const -> bool { return violating_colors.empty(); }
    };

    // Per color, the number of vertices missing it has the parity of n.
    // Holds for any complete proper coloring; throws on an uncolored edge.
    auto parity_check(const PartialEdgeColoring & phi) -> ParityReport;

    struct EnumerationOptions
    {
        long long limit = 1'000'000; // colorings reported before truncation
        long long budget = default_node_budget;
        // Report one coloring per orbit of color permutations. Only valid
        // when no edge is pinned.
        bool up_to_color_permutation = false;
        // Pinned colors per edge id (0 = free).
        std::vector<int> pinned;
    };

    struct EnumerationSummary
    {
        long long count = 0;
        bool truncated = false; // limit or budget reached
        long long nodes = 0;
    };

    // Calls visit on each proper k-coloring of G - e in a fixed order; stops
    // early if visit returns false (reported as truncated).
    auto for_each_coloring(const GraphPtr & g, std::optional<int> e, int k, const EnumerationOptions & options,
        const std::function<auto(const PartialEdgeColoring &)->bool> & visit) -> EnumerationSummary;

    struct Enumeration
    {
        std::vector<PartialEdgeColoring> colorings;
        bool truncated = false;
    };

    auto enumerate_colorings(const GraphPtr & g, std::optional<int> e, int k, long long limit) -> Enumeration;
}

#endif
