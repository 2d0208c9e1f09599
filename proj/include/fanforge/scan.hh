#ifndef FANFORGE_GUARD_SCAN_HH
#define FANFORGE_GUARD_SCAN_HH 1

#include <fanforge/solver.hh>
#include <fanforge/suite.hh>
#include <fanforge/verdict.hh>

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fanforge
{
    struct ScanOptions
    {
        // Lemma, theorem and conjecture names, or "val". Empty runs all.
        std::vector<std::string> checks;
        SuiteOptions suite;
        SolverOptions solver;
        int workers = 1;
        bool timing = false;
    };

    // Every name accepted in ScanOptions::checks, in report order.
    auto scan_check_names() -> const std::vector<std::string> &;

    // Throws PreconditionError on an unknown name.
    auto validate_checks(const std::vector<std::string> & checks) -> void;

    struct ScanSummary
    {
        long long graphs = 0;
        long long errors = 0;
        std::map<std::string, std::map<std::string, long long>> counts; // check, status name

        // 1 on any FAIL, else 3 on any operational error, else 2 on any
        // UNKNOWN, else 0. CONDITIONAL counts as passing.
        auto exit_code() const -> int;
    };

    // Report object for one graph6 line. Parse errors give an object with
    // an "error" field instead of verdicts. The suite seed is offset by the
    // line number so the result does not depend on scheduling.
    auto scan_line(const std::string & text, long long line, const ScanOptions & options) -> nlohmann::json;

    // Reads graph6 lines, writes one JSON object per graph in input order.
    // Blank lines and headers are skipped but still counted for numbering.
    auto scan_stream(std::istream & in, std::ostream & out, const ScanOptions & options) -> ScanSummary;

    // check, status, count rows with a header line.
    auto summary_tsv(const ScanSummary & summary) -> std::string;
}

#endif
