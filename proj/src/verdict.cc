#include <fanforge/verdict.hh>

using namespace fanforge;

using nlohmann::json;
using std::string;
using std::vector;

auto fanforge::to_string(Status s) -> string
{
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::inapplicable: return "INAPPLICABLE";
        case Status::unknown: return "UNKNOWN";
        case Status::conditional: return "CONDITIONAL";
    }
    return "UNKNOWN";
}

auto Verdict::pass(string check, string detail) -> Verdict
{
    return Verdict{std::move(check), Status::pass, std::move(detail)};
}

auto Verdict::fail(string check, string detail, json evidence) -> Verdict
{
    return Verdict{std::move(check), Status::fail, std::move(detail), std::move(evidence)};
}

auto Verdict::inapplicable(string check, string detail) -> Verdict
{
    return Verdict{std::move(check), Status::inapplicable, std::move(detail)};
}

auto Verdict::unknown(string check, string detail) -> Verdict
{
    return Verdict{std::move(check), Status::unknown, std::move(detail)};
}

auto Verdict::conditional(string check, string detail) -> Verdict
{
    return Verdict{std::move(check), Status::conditional, std::move(detail)};
}

auto fanforge::combine(const string & check, const vector<Verdict> & parts) -> Verdict
{
    for (auto want : {Status::fail, Status::unknown, Status::conditional}) {
        for (auto & p : parts)
            if (p.status == want) {
                auto result = p;
                result.check = check;
                return result;
            }
    }
    int passes = 0;
    for (auto & p : parts)
        passes += p.status == Status::pass;
    if (passes > 0)
        return Verdict::pass(check, std::to_string(passes) + " instance(s) passed");
    if (parts.empty())
        return Verdict::inapplicable(check, "no instances");
    auto result = parts.front();
    result.check = check;
    return result;
}

auto fanforge::to_json(const Verdict & v) -> json
{
    json j{{"check", v.check}, {"status", to_string(v.status)}};
    if (! v.detail.empty())
        j["detail"] = v.detail;
    if (! v.evidence.empty())
        j["evidence"] = v.evidence;
    return j;
}
