#ifndef FANFORGE_GUARD_SUITE_HH
#define FANFORGE_GUARD_SUITE_HH 1

#include <fanforge/facts.hh>
#include <fanforge/fan.hh>
#include <fanforge/verdict.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace fanforge
{
    struct SuiteOptions
    {
        SearchMode mode = SearchMode::exhaustive;
        long long budget = 100'000;      // fan searches and coloring pools
        int colorings = 10;              // per critical edge
        long long pool = 2'000;          // colorings sampled from, per edge
        long long p2_budget = 20'000;
        long long witness_budget = 3'000;
        std::uint64_t seed = 0;
        std::vector<std::string> checks; // empty runs every lemma check
    };

    // fan-elementary, fan-linkage, kierstead-elementary, stable-swaps,
    // tau-sequence, rs1-linkage, tau-items, pfan, pfan-adjacency,
    // center-cover, parity.
    auto lemma_check_names() -> const std::vector<std::string> &;

    // Every critical edge, both ends as center, and a seeded sample of up
    // to options.colorings colorings of G - e per edge. Fan-level checks
    // run on each sampled coloring; checks that need a maximum multifan run
    // on the sampled colorings attaining the maximum size, or on the search
    // result if none does. One combined verdict per requested check, in the
    // order of lemma_check_names().
    auto run_lemma_suite(const GraphFacts & facts, const SuiteOptions & options = {}) -> std::vector<Verdict>;
}

#endif
