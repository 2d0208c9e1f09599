#ifndef FANFORGE_GUARD_FACTS_HH
#define FANFORGE_GUARD_FACTS_HH 1

#include <fanforge/solver.hh>

namespace fanforge
{
    // Solver-derived facts about one graph, computed once and shared by the
    // hypothesis gates of every check.
    struct GraphFacts
    {
        GraphPtr graph;
        DegreeProfile profile;
        CriticalityReport criticality;

        auto delta() const -> int { return profile.delta; }
        auto exact() const -> bool { return criticality.verdict.exact; }
        auto class_two() const -> bool { return exact() && criticality.verdict.edge_class == EdgeClass::two; }
        auto edge_critical(int e) const -> Tri;
        auto light(int v) const -> bool;
    };

    auto compute_facts(const GraphPtr & g, const SolverOptions & options = {}) -> GraphFacts;
}

#endif
