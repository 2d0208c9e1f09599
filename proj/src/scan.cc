#include <fanforge/errors.hh>
#include <fanforge/facts.hh>
#include <fanforge/graph6.hh>
#include <fanforge/scan.hh>
#include <fanforge/theorems.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

using namespace fanforge;

using nlohmann::json;
using std::string;
using std::vector;

auto fanforge::scan_check_names() -> const vector<string> &
{
    static const vector<string> names = [] {
        auto all = lemma_check_names();
        all.push_back("val");
        for (auto & n : theorem_names())
            all.push_back(n);
        for (auto & n : conjecture_names())
            all.push_back(n);
        return all;
    }();
    return names;
}

auto fanforge::validate_checks(const vector<string> & checks) -> void
{
    auto & known = scan_check_names();
    for (auto & c : checks)
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw PreconditionError("unknown check " + c);
}

auto ScanSummary::exit_code() const -> int
{
    bool fail = false, unknown = false;
    for (auto & [check, by_status] : counts) {
        fail = fail || by_status.count("FAIL");
        unknown = unknown || by_status.count("UNKNOWN");
    }
    if (fail)
        return 1;
    if (errors > 0)
        return 3;
    return unknown ? 2 : 0;
}

namespace
{
    auto contains(const vector<string> & names, const string & name) -> bool
    {
        return std::find(names.begin(), names.end(), name) != names.end();
    }

    auto verdicts_for(const GraphFacts & facts, const ScanOptions & options, long long line) -> vector<Verdict>
    {
        auto & wanted = options.checks.empty() ? scan_check_names() : options.checks;
        auto suite = options.suite;
        suite.seed = options.suite.seed + static_cast<std::uint64_t>(line);
        suite.checks.clear();
        for (auto & name : lemma_check_names())
            if (contains(wanted, name))
                suite.checks.push_back(name);

        vector<Verdict> result;
        if (! suite.checks.empty())
            result = run_lemma_suite(facts, suite);
        if (contains(wanted, "val"))
            result.push_back(check_val(facts));
        for (auto & name : theorem_names())
            if (contains(wanted, name))
                result.push_back(check_theorem(name, facts));
        for (auto & name : conjecture_names())
            if (contains(wanted, name))
                result.push_back(check_conjecture(name, facts, options.solver));
        return result;
    }
}

auto fanforge::scan_line(const string & text, long long line, const ScanOptions & options) -> json
{
    auto start = std::chrono::steady_clock::now();
    json report{{"line", line}};
    try {
        auto g = share(from_graph6(text));
        auto facts = compute_facts(g, options.solver);
        auto & verdict = facts.criticality.verdict;
        report["graph6"] = to_graph6(*g);
        report["n"] = g->order();
        report["m"] = g->size();
        report["delta"] = facts.delta();
        report["connected"] = g->is_connected();
        report["exact"] = verdict.exact;
        report["chi_prime"] = verdict.exact ? json(verdict.chi_prime) : json(nullptr);
        report["class"] = verdict.exact ? json(verdict.edge_class == EdgeClass::one ? 1 : 2) : json(nullptr);
        report["delta_critical"] = to_string(facts.criticality.delta_critical);
        report["overfull"] = is_overfull(*g);
        report["just_overfull"] = is_just_overfull(*g);
        report["core_min_degree"] = facts.profile.core_min_degree;
        report["core_max_degree"] = facts.profile.core_max_degree;
        json verdicts = json::array();
        for (auto & v : verdicts_for(facts, options, line))
            verdicts.push_back(to_json(v));
        report["verdicts"] = verdicts;
    }
    catch (const ParseError & e) {
        report["graph6"] = text;
        report["error"] = string("parse error: ") + e.what();
    }
    catch (const Error & e) {
        report["graph6"] = text;
        report["error"] = e.what();
    }
    if (options.timing)
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto fanforge::scan_stream(std::istream & in, std::ostream & out, const ScanOptions & options) -> ScanSummary
{
    validate_checks(options.checks);
    ScanSummary summary;
    int workers = std::max(1, options.workers);
    const std::size_t chunk = 64 * static_cast<std::size_t>(workers);

    vector<std::pair<long long, string>> pending;
    vector<json> reports;
    auto flush = [&] {
        reports.assign(pending.size(), json());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next++) < pending.size();)
                reports[i] = scan_line(pending[i].second, pending[i].first, options);
        };
        vector<std::thread> threads;
        for (int w = 1; w < std::min<int>(workers, pending.size()); ++w)
            threads.emplace_back(work);
        work();
        for (auto & t : threads)
            t.join();
        for (auto & r : reports) {
            out << r.dump() << '\n';
            ++summary.graphs;
            if (r.contains("error"))
                ++summary.errors;
            else
                for (auto & v : r["verdicts"])
                    ++summary.counts[v["check"].get<string>()][v["status"].get<string>()];
        }
        pending.clear();
    };

    string text;
    long long line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (is_graph6_blank(text))
            continue;
        pending.emplace_back(line, text);
        if (pending.size() >= chunk)
            flush();
    }
    flush();
    return summary;
}

auto fanforge::summary_tsv(const ScanSummary & summary) -> string
{
    std::ostringstream s;
    s << "check\tstatus\tcount\n";
    for (auto & [check, by_status] : summary.counts)
        for (auto & [status, count] : by_status)
            s << check << '\t' << status << '\t' << count << '\n';
    s << "graphs\t-\t" << summary.graphs << '\n';
    s << "errors\t-\t" << summary.errors << '\n';
    return s.str();
}
