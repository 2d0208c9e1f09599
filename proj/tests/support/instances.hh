#ifndef FANFORGE_GUARD_TESTS_INSTANCES_HH
#define FANFORGE_GUARD_TESTS_INSTANCES_HH 1

#include <fanforge/facts.hh>
#include <fanforge/fan.hh>
#include <fanforge/graph6.hh>

#include "fixtures.hh"
#include "oracles.hh"

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fixture
{
    // A typical maximum multifan at a light center together with its coloring.
    struct FanCase
    {
        std::shared_ptr<const fanforge::GraphFacts> facts;
        fanforge::PartialEdgeColoring phi;
        fanforge::Multifan fan;
    };

    // Class two graphs with a critical edge r s1 whose maximum multifan at r
    // leaves colors uncovered. Each line of tau_instances.txt holds a graph6
    // string, r and s1. Up to per_graph maximum colorings are taken per line,
    // one per orbit of color permutations.
    inline auto tau_cases(int per_graph) -> std::vector<FanCase>
    {
        using namespace fanforge;
        std::vector<FanCase> result;
        for (auto & line : oracle::read_lines(data_path("tau_instances.txt"))) {
            std::istringstream in(line);
            std::string text;
            int r, s1;
            in >> text >> r >> s1;
            auto g = share(from_graph6(text));
            auto facts = std::make_shared<const GraphFacts>(compute_facts(g));
            int e = *g->edge_between(r, s1);
            auto best = search_maximum_multifan(g, e, r, SearchMode::exhaustive, 1'000'000);
            int used = 0;
            EnumerationOptions options;
            options.up_to_color_permutation = true;
            for_each_coloring(g, e, g->max_degree(), options, [&](const PartialEdgeColoring & phi) {
                auto f = grow_multifan(phi, r);
                if (f.vertex_count() != best.fan.vertex_count())
                    return true;
                auto n = normalize_typical(phi, f);
                n.fan.status = best.status;
                result.push_back(FanCase{facts, n.coloring, n.fan});
                return ++used < per_graph;
            });
        }
        return result;
    }
}

#endif
