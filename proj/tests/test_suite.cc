#include <fanforge/errors.hh>
#include <fanforge/graph6.hh>
#include <fanforge/solver.hh>
#include <fanforge/suite.hh>

#include "support/fixtures.hh"
#include "support/oracles.hh"

#include <catch2/catch_amalgamated.hpp>

using namespace fanforge;

using std::string;
using std::vector;

namespace
{
    auto statuses(const vector<Verdict> & vs) -> std::map<string, Status>
    {
        std::map<string, Status> result;
        for (auto & v : vs)
            result[v.check] = v.status;
        return result;
    }
}

TEST_CASE("lemma suite on the named corpus")
{
    vector<std::pair<string, SimpleGraph>> corpus{{"C5", cycle(5)}, {"C7", cycle(7)}, {"C9", cycle(9)},
        {"K5", complete(5)}, {"K7", complete(7)}, {"Petersen-v", delete_vertex(petersen(), 0)}};
    for (auto & [label, g] : corpus) {
        auto facts = compute_facts(share(g));
        auto verdicts = run_lemma_suite(facts);
        REQUIRE(verdicts.size() == lemma_check_names().size());
        for (auto & v : verdicts) {
            INFO(label << " " << v.check << " " << to_string(v.status) << " " << v.detail);
            CHECK(v.status != Status::fail);
            CHECK(v.status != Status::unknown);
        }
        auto s = statuses(verdicts);
        if (label[0] == 'K')
            CHECK(s["fan-elementary"] == Status::inapplicable);
        else {
            CHECK(s["fan-elementary"] == Status::pass);
            CHECK(s["parity"] == Status::pass);
        }
    }
}

TEST_CASE("lemma suite is deterministic for a seed")
{
    auto facts = compute_facts(share(delete_vertex(petersen(), 0)));
    SuiteOptions options;
    options.colorings = 3;
    options.seed = 7;
    auto a = run_lemma_suite(facts, options);
    auto b = run_lemma_suite(facts, options);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(to_json(a[i]) == to_json(b[i]));
}

TEST_CASE("lemma suite check selection")
{
    auto facts = compute_facts(share(cycle(5)));
    SuiteOptions options;
    options.checks = {"parity", "fan-elementary"};
    auto vs = run_lemma_suite(facts, options);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0].check == "parity");
    options.checks = {"nope"};
    CHECK_THROWS_AS(run_lemma_suite(facts, options), PreconditionError);

    auto class_one = compute_facts(share(path(4)));
    for (auto & v : run_lemma_suite(class_one))
        CHECK(v.status == Status::inapplicable);
}
