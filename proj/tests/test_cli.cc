#include <fanforge/cli.hh>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace fanforge;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    struct Run
    {
        int code;
        string out;
        string err;

        auto lines() const -> vector<json>
        {
            vector<json> result;
            std::istringstream s(out);
            for (string line; std::getline(s, line);)
                if (! line.empty())
                    result.push_back(json::parse(line));
            return result;
        }
    };

    auto run(vector<string> args, const string & input = "") -> Run
    {
        args.insert(args.begin(), "fanforge");
        vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
        return Run{code, out.str(), err.str()};
    }

    auto find_check(const vector<json> & lines, const string & check) -> json
    {
        for (auto & j : lines)
            if (j.value("check", "") == check)
                return j;
        return json{};
    }
}

TEST_CASE("classify reports class and overfullness")
{
    // C5, C4, Petersen
    auto r = run({"classify", "Dhc", "Ch", "I?h]@eOWG"});
    REQUIRE(r.code == 0);
    auto lines = r.lines();
    REQUIRE(lines.size() == 3);

    CHECK(lines[0]["class"] == 2);
    CHECK(lines[0]["chi_prime"] == 3);
    CHECK(lines[0]["overfull"] == true);
    CHECK(lines[0]["just_overfull"] == true);
    CHECK(lines[0]["overfull_deficiency"] == 0);
    CHECK(lines[0]["delta_critical"] == "yes");

    CHECK(lines[1]["class"] == 1);
    CHECK(lines[1]["overfull_deficiency"].is_null());

    CHECK(lines[2]["class"] == 2);
    CHECK(lines[2]["chi_prime"] == 4);
    CHECK(lines[2]["overfull"] == false);
}

TEST_CASE("classify tsv has a header and one row per graph")
{
    auto r = run({"classify", "--format", "tsv"}, "Dhc\nCh\n");
    REQUIRE(r.code == 0);
    std::istringstream s(r.out);
    vector<string> rows;
    for (string line; std::getline(s, line);)
        rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].rfind("graph6\t", 0) == 0);
    CHECK(rows[1].rfind("Dhc\t", 0) == 0);
}

TEST_CASE("malformed graph6 gives exit 3 and an error record")
{
    auto r = run({"classify", "--input", "-"}, "Dhc\n!!bad\n");
    CHECK(r.code == 3);
    auto lines = r.lines();
    REQUIRE(lines.size() == 2);
    CHECK(lines[0]["class"] == 2);
    CHECK(lines[1]["line"] == 2);
    CHECK(lines[1].contains("error"));
}

TEST_CASE("verify emits one verdict line per check")
{
    auto r = run({"verify", "--checks", "val,main", "Dhc"});
    REQUIRE(r.code == 0);
    auto lines = r.lines();
    CHECK(lines.size() == 2);
    CHECK(find_check(lines, "val")["status"] == "PASS");
    CHECK(find_check(lines, "main")["graph6"] == "Dhc");

    auto c4 = run({"verify", "--checks", "main", "Ch"});
    REQUIRE(c4.code == 0);
    CHECK(find_check(c4.lines(), "main")["status"] == "INAPPLICABLE");

    auto bad = run({"verify", "--checks", "val"}, "!!bad\n");
    CHECK(bad.code == 3);
}

TEST_CASE("verify rejects unknown checks and flags")
{
    CHECK(run({"verify", "--checks", "no-such-check", "Dhc"}).code == 3);
    CHECK(run({"verify", "--no-such-flag", "Dhc"}).code == 3);
    CHECK(run({}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("fan on C5 finds a two vertex maximum fan")
{
    auto r = run({"fan", "Dhc", "--edge", "0-1"});
    REQUIRE(r.code == 0);
    auto j = r.lines().at(0);
    CHECK(j["maximum"]["vertex_count"] == 2);
    CHECK(j["maximum"]["status"] == "EXACT");
    CHECK(j["edge_critical"] == "yes");
    CHECK(j["edge"] == json::array({0, 1}));
}

TEST_CASE("fan input errors")
{
    CHECK(run({"fan", "Dhc", "--edge", "0-2"}).code == 3);
    CHECK(run({"fan", "Dhc", "--edge", "zero-one"}).code == 3);
    CHECK(run({"fan", "Dhc"}).code == 3);

    // Exhaustive search on ten vertices needs --force.
    auto petersen = run({"fan", "I?h]@eOWG", "--edge", "0-4"});
    CHECK(petersen.code == 3);
    CHECK(petersen.err.find("--force") != string::npos);
}

TEST_CASE("seeded reachability is reproducible")
{
    auto a = run({"fan", "Dhc", "--edge", "0-1", "--mode", "reachability", "--seed", "5"});
    auto b = run({"fan", "Dhc", "--edge", "0-1", "--mode", "reachability", "--seed", "5"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("budget defaults from the environment")
{
    ::setenv("FANFORGE_BUDGET", "1234", 1);
    auto from_env = run({"fan", "Dhc", "--edge", "0-1"});
    auto explicit_flag = run({"fan", "Dhc", "--edge", "0-1", "--budget", "77"});
    ::setenv("FANFORGE_BUDGET", "many", 1);
    auto broken = run({"fan", "Dhc", "--edge", "0-1"});
    ::unsetenv("FANFORGE_BUDGET");

    CHECK(from_env.lines().at(0)["budget"] == 1234);
    CHECK(explicit_flag.lines().at(0)["budget"] == 77);
    CHECK(broken.code == 3);
}

TEST_CASE("scan is ordered and independent of worker count")
{
    string input = "Dhc\nCh\n\nD~{\n!!bad\nFhCKG\n";
    auto one = run({"scan", "--workers", "1", "--seed", "9"}, input);
    auto four = run({"scan", "--workers", "4", "--seed", "9"}, input);
    CHECK(one.code == 3);
    CHECK(one.out == four.out);
    auto lines = one.lines();
    REQUIRE(lines.size() == 5);
    CHECK(lines[0]["line"] == 1);
    CHECK(lines[2]["line"] == 4);
    CHECK(lines[3].contains("error"));

    auto tsv = run({"scan", "--format", "tsv", "--checks", "val"}, "Dhc\n");
    CHECK(tsv.code == 0);
    CHECK(tsv.out.find("val\tPASS\t1") != string::npos);
}

TEST_CASE("output option writes to a file")
{
    auto path = string("cli_output_test.jsonl");
    auto r = run({"classify", "Dhc", "--output", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    string line;
    REQUIRE(std::getline(f, line));
    CHECK(json::parse(line)["class"] == 2);
    std::remove(path.c_str());
}
