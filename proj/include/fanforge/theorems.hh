#ifndef FANFORGE_GUARD_THEOREMS_HH
#define FANFORGE_GUARD_THEOREMS_HH 1

#include <fanforge/facts.hh>
#include <fanforge/fan.hh>
#include <fanforge/verdict.hh>

#include <optional>
#include <string>
#include <vector>

namespace fanforge
{
    enum class P2Status
    {
        verified_exhaustive,
        verified_within_budget,
        violated,
        unknown
    };

    auto to_string(P2Status s) -> std::string;

    struct P2Check
    {
        P2Status status = P2Status::unknown;
        std::optional<PartialEdgeColoring> witness; // F-stable coloring breaking elementarity
        long long examined = 0;
    };

    // Is `vertices` elementary under every F-stable coloring? All colorings
    // with the spoke colors of F pinned are enumerated up to the budget; if
    // that runs out, a BFS over single Kempe changes that keep F-stability
    // continues from phi. Budget 0 only looks at phi itself.
    auto check_p2(const PartialEdgeColoring & phi, const Multifan & f, const std::vector<int> & vertices,
        long long budget) -> P2Check;

    // A maximum multifan F extended by (delta-1)-neighbors of r.
    struct PFan
    {
        Multifan base;
        std::vector<int> extension;
        P2Status p2 = P2Status::unknown;
        long long examined = 0;
        // candidates dropped because an F-stable coloring broke elementarity
        std::vector<int> rejected;
        std::vector<PartialEdgeColoring> rejection_witnesses;

        auto vertices() const -> std::vector<int>;
    };

    // Adds (delta-1)-neighbors of r outside F in increasing id order, keeping
    // each one whose addition survives check_p2.
    auto grow_pfan(const PartialEdgeColoring & phi, const Multifan & base, long long budget) -> PFan;

    // Rotations and (1, .)-linkage off the base fan, and r on the shared
    // chains between base and extension vertices, met after any spoke of
    // the first color.
    auto verify_pfan_properties(const GraphFacts & facts, const PartialEdgeColoring & phi, const PFan & s) -> Verdict;

    // No vertex outside N[r] adjacent to the P-fan has degree delta - 1.
    auto verify_pfan_neighbors(const GraphFacts & facts, const PartialEdgeColoring & phi, const PFan & s) -> Verdict;

    // For a light center of degree delta - 1 with a maximum multifan, no x
    // outside N[r] sharing a neighbor with s_1 outside N_{delta-1}[r] misses
    // every color missing at r.
    auto verify_center_not_covered(const GraphFacts & facts, const PartialEdgeColoring & phi, const Multifan & f)
        -> Verdict;

    // Vizing's adjacency lemma on every critical edge, both orientations.
    auto check_val(const GraphFacts & facts) -> Verdict;

    // Parity of the number of vertices missing each color, for a complete
    // coloring.
    auto check_parity(const PartialEdgeColoring & phi) -> Verdict;

    // s1-adj, longk, longk2, main.
    auto theorem_names() -> const std::vector<std::string> &;
    auto check_theorem(const std::string & name, const GraphFacts & facts) -> Verdict;

    // just-overfull, overfull. A FAIL is re-checked with the alternate edge
    // order of the solver before it is reported.
    auto conjecture_names() -> const std::vector<std::string> &;
    auto check_conjecture(const std::string & name, const GraphFacts & facts, const SolverOptions & options = {})
        -> Verdict;
}

#endif
