#ifndef FANFORGE_GUARD_TESTS_FIXTURES_HH
#define FANFORGE_GUARD_TESTS_FIXTURES_HH 1

#include <fanforge/coloring.hh>
#include <fanforge/graph.hh>

#include <string>

namespace fixture
{
    // C5 labeled r=0, s1=1, a=2, b=3, c=4 in cycle order; rs1 uncolored and
    // the path s1-a-b-c-r colored 1,2,1,2 with two colors.
    enum : int
    {
        r = 0,
        s1 = 1,
        a = 2,
        b = 3,
        c = 4
    };

    inline auto c5_coloring() -> fanforge::PartialEdgeColoring
    {
        auto g = fanforge::share(fanforge::cycle(5));
        std::vector<int> colors(g->size(), 0);
        colors[*g->edge_between(s1, a)] = 1;
        colors[*g->edge_between(a, b)] = 2;
        colors[*g->edge_between(b, c)] = 1;
        colors[*g->edge_between(c, r)] = 2;
        return fanforge::PartialEdgeColoring(g, 2, colors);
    }

    inline auto data_path(const std::string & name) -> std::string
    {
        return std::string(FANFORGE_TEST_DATA) + "/" + name;
    }
}

#endif
