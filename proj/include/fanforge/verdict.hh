#ifndef FANFORGE_GUARD_VERDICT_HH
#define FANFORGE_GUARD_VERDICT_HH 1

#include <json.hpp>

#include <string>
#include <vector>

namespace fanforge
{
    enum class Status
    {
        pass,
        fail,
        inapplicable,
        unknown,
        // the conclusion was checked but a hypothesis (such as maximality of
        // a fan) is only known within a search budget
        conditional
    };

    auto to_string(Status s) -> std::string;

    struct Verdict
    {
        std::string check;
        Status status = Status::pass;
        std::string detail;
        nlohmann::json evidence = nlohmann::json::object();

        static auto pass(std::string check, std::string detail = "") -> Verdict;
        static auto fail(std::string check, std::string detail, nlohmann::json evidence = nlohmann::json::object()) -> Verdict;
        static auto inapplicable(std::string check, std::string detail) -> Verdict;
        static auto unknown(std::string check, std::string detail) -> Verdict;
        static auto conditional(std::string check, std::string detail) -> Verdict;
    };

    // Folds several verdicts for the same check: any FAIL wins, then
    // UNKNOWN, CONDITIONAL, PASS; INAPPLICABLE only if nothing applied.
    auto combine(const std::string & check, const std::vector<Verdict> & parts) -> Verdict;

    auto to_json(const Verdict & v) -> nlohmann::json;
}

#endif
