#include <fanforge/facts.hh>

using namespace fanforge;

auto GraphFacts::edge_critical(int e) const -> Tri
{
    if (! exact())
        return Tri::unknown;
    return criticality.critical_edges.at(e);
}

auto GraphFacts::light(int v) const -> bool
{
    int count = 0;
    for (int w : graph->neighbors(v))
        count += graph->degree(w) == profile.delta;
    return count <= 2;
}

auto fanforge::compute_facts(const GraphPtr & g, const SolverOptions & options) -> GraphFacts
{
    return GraphFacts{g, degree_profile(*g), analyse_criticality(g, options)};
}
