#include <fanforge/errors.hh>
#include <fanforge/facts.hh>
#include <fanforge/graph6.hh>
#include <fanforge/solver.hh>

#include "support/fixtures.hh"
#include "support/oracles.hh"

#include <catch2/catch_amalgamated.hpp>

using namespace fanforge;

using std::pair;
using std::vector;

namespace
{
    auto edge_pairs(const SimpleGraph & g) -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (auto & e : g.edges())
            result.emplace_back(e.u, e.v);
        return result;
    }

    auto chi(const SimpleGraph & g, SolverOptions options = {}) -> int
    {
        auto verdict = chromatic_index(share(g), options);
        REQUIRE(verdict.exact);
        return verdict.chi_prime;
    }
}

TEST_CASE("known chromatic indices")
{
    CHECK(chi(cycle(4)) == 2);
    for (int k = 1; k <= 4; ++k)
        CHECK(chi(cycle(2 * k + 1)) == 3);
    for (int k = 1; k <= 3; ++k)
        CHECK(chi(complete(2 * k + 1)) == 2 * k + 1);
    CHECK(chi(complete(4)) == 3);
    CHECK(chi(complete(6)) == 5);
    CHECK(chi(petersen()) == 4);
    CHECK(chi(SimpleGraph(3, {})) == 0);

    SolverOptions no_shortcut;
    no_shortcut.use_overfull_shortcut = false;
    CHECK(chi(complete(5), no_shortcut) == 5);
    no_shortcut.alternate_order = true;
    CHECK(chi(petersen(), no_shortcut) == 4);
}

TEST_CASE("class two witnesses are proper")
{
    auto verdict = chromatic_index(share(petersen()));
    REQUIRE(verdict.witness);
    CHECK(verdict.edge_class == EdgeClass::two);
    CHECK(verdict.witness->k() == 4);
    CHECK(validate(*verdict.witness));
    CHECK_FALSE(verdict.witness->uncolored());
}

TEST_CASE("overfull arithmetic")
{
    CHECK(is_overfull(cycle(5)));
    CHECK(is_just_overfull(cycle(5)));
    CHECK(is_overfull(complete(5)));
    CHECK_FALSE(is_just_overfull(complete(5)));
    auto pv = delete_vertex(petersen(), 0);
    CHECK_FALSE(is_overfull(pv));
    CHECK(overfull_deficiency(cycle(5)) == 0);
    CHECK(overfull_deficiency(complete(5)) == -2);
    CHECK(overfull_deficiency(pv) == 2);
    CHECK_THROWS_AS(overfull_deficiency(cycle(4)), PreconditionError);
}

TEST_CASE("criticality")
{
    auto c5 = share(cycle(5));
    for (int e = 0; e < c5->size(); ++e)
        CHECK(is_critical_edge(c5, e) == Tri::yes);
    CHECK(is_delta_critical(c5) == Tri::yes);

    auto pv = share(delete_vertex(petersen(), 0));
    CHECK(is_delta_critical(pv) == Tri::yes);
    CHECK(chromatic_index(pv).edge_class == EdgeClass::two);

    // K5 - e is still overfull, so no edge of K5 is critical
    auto k5 = share(complete(5));
    CHECK(is_critical_edge(k5, 0) == Tri::no);
    CHECK(is_delta_critical(k5) == Tri::no);

    auto c5_isolated = share(SimpleGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    auto report = analyse_criticality(c5_isolated);
    CHECK(report.delta_critical == Tri::no);
    CHECK_FALSE(report.note.empty());

    auto c4 = share(cycle(4));
    CHECK(is_delta_critical(c4) == Tri::no);
}

TEST_CASE("parity of missing counts")
{
    auto k4 = share(complete(4));
    auto witness = *chromatic_index(k4).witness;
    auto report = parity_check(witness);
    CHECK(report.ok());
    for (int count : report.missing_counts)
        CHECK(count == 0);

    auto c5 = *chromatic_index(share(cycle(5))).witness;
    auto odd = parity_check(c5);
    CHECK(odd.ok());
    for (int c = 1; c <= 3; ++c)
        CHECK(odd.missing_counts[c] % 2 == 1);

    CHECK_THROWS_AS(parity_check(fixture::c5_coloring()), PreconditionError);
}

TEST_CASE("coloring enumeration")
{
    auto c5 = share(cycle(5));
    CHECK(enumerate_colorings(c5, 0, 2, 100).colorings.size() == 2);

    auto single = share(SimpleGraph(2, {{0, 1}}));
    auto one = enumerate_colorings(single, 0, 1, 100);
    CHECK(one.colorings.size() == 1);
    CHECK_FALSE(one.truncated);

    auto k4e = complete(4);
    auto k4 = share(k4e);
    auto minus = delete_edge(k4e, 0);
    auto pairs = edge_pairs(minus);
    auto expected = oracle::count_colorings(4, pairs, 3);
    auto got = enumerate_colorings(k4, 0, 3, 1'000'000);
    CHECK(static_cast<long>(got.colorings.size()) == expected);
    for (auto & phi : got.colorings)
        CHECK(validate(phi));

    auto truncated = enumerate_colorings(k4, 0, 3, 3);
    CHECK(truncated.truncated);
    CHECK(truncated.colorings.size() == 3);

    EnumerationOptions orbits;
    orbits.up_to_color_permutation = true;
    auto summary = for_each_coloring(k4, 0, 3, orbits, [](const PartialEdgeColoring &) { return true; });
    CHECK(summary.count * 6 == expected);
}

TEST_CASE("class matches a brute-force colorability check on small graphs")
{
    for (auto & line : oracle::read_lines(fixture::data_path("connected_le7.g6"))) {
        auto g = from_graph6(line);
        if (g.order() > 5 || g.size() == 0)
            continue;
        bool colorable = oracle::count_colorings(g.order(), edge_pairs(g), g.max_degree()) > 0;
        auto verdict = chromatic_index(share(g));
        CHECK(verdict.exact);
        CHECK((verdict.edge_class == EdgeClass::one) == colorable);
    }
}

TEST_CASE("vizing bound and witnesses on all connected graphs up to seven vertices")
{
    int class_two = 0, critical = 0;
    for (auto & line : oracle::read_lines(fixture::data_path("connected_le7.g6"))) {
        auto g = share(from_graph6(line));
        auto report = analyse_criticality(g);
        auto & v = report.verdict;
        REQUIRE(v.exact);
        CHECK(v.chi_prime >= v.delta);
        CHECK(v.chi_prime <= v.delta + 1);
        if (g->size() > 0) {
            REQUIRE(v.witness);
            CHECK(validate(*v.witness));
            CHECK(parity_check(*v.witness).ok());
        }
        if (is_overfull(*g))
            CHECK(v.edge_class == EdgeClass::two);
        class_two += v.edge_class == EdgeClass::two;
        critical += report.delta_critical == Tri::yes;
    }
    CHECK(class_two == 40);
    CHECK(critical == 26);
}

TEST_CASE("graph facts")
{
    auto facts = compute_facts(share(cycle(5)));
    CHECK(facts.exact());
    CHECK(facts.class_two());
    CHECK(facts.delta() == 2);
    CHECK(facts.edge_critical(0) == Tri::yes);
    CHECK(facts.light(0));

    auto k4 = compute_facts(share(complete(4)));
    CHECK_FALSE(k4.class_two());
    CHECK_FALSE(k4.light(0));
}
