#include "abeta/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

using namespace abeta;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// First data row of a CSV document keyed by header.
std::map<std::string, std::string> first_row(const std::string& csv, std::size_t index = 0) {
    std::istringstream in(csv);
    std::string header, line;
    std::getline(in, header);
    for (std::size_t i = 0; i <= index; ++i) std::getline(in, line);
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        if (!s.empty() && s.back() == ',') out.emplace_back();
        return out;
    };
    const auto h = split(header), v = split(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < h.size(); ++i) row[h[i]] = i < v.size() ? v[i] : "";
    return row;
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("format_number") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3) == "0.333333333333");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(-1e-20) == "-1e-20");
    CHECK(format_number(4.0) == "4");
}

TEST_CASE("bounds over beta") {
    auto r = run({"bounds", "--beta", "0"});
    REQUIRE(r.code == 0);
    auto row = first_row(r.out);
    CHECK(row["gamma1"] == "0.5");
    CHECK(row["gamma2"] == "0.333333333333");
    CHECK(row["gamma3"] == "0.25");
    CHECK(row["A2"] == "1");
    CHECK(row["A3"] == "1.33333333333");
    CHECK(row["Gamma1"] == "0.5");
    CHECK(row["Gamma2"] == "0.416666666667");

    r = run({"bounds", "--beta", "1"});
    row = first_row(r.out);
    CHECK(row["gamma1"] == "1");
    CHECK(row["gamma2"] == "1");
    CHECK(row["gamma3"] == "1");

    r = run({"bounds", "--beta", "0:1:5"});
    CHECK(count_lines(r.out) == 6);
    CHECK(first_row(r.out, 4)["beta"] == "1");
}

TEST_CASE("bounds for Fekete-Szego") {
    const auto r = run({"bounds", "--fs", "--lambda", "1", "0", "--mu", "0"});
    REQUIRE(r.code == 0);
    auto row = first_row(r.out);
    CHECK(row["upper"] == "0.666666666667");
    CHECK(row["lower"] == "0");
    CHECK(row["upper_region"] == "flat");
    CHECK(count_lines(run({"bounds", "--fs", "--mu", "0:3:13"}).out) == 14);
}

TEST_CASE("eval") {
    auto r = run({"eval", "--extremal", "f1", "--beta", "0"});
    REQUIRE(r.code == 0);
    auto row = first_row(r.out);
    CHECK(row["gamma1"] == "0.5");
    CHECK(row["A3"] == "1.33333333333");
    CHECK(row["Gamma2"] == "0.416666666667");

    r = run({"eval", "--a2", "0", "--a3", "0", "--a4", "0"});
    REQUIRE(r.code == 0);
    row = first_row(r.out);
    for (const char* col : {"gamma1", "gamma2", "gamma3", "A2", "A3", "A4", "Gamma1", "Gamma2", "Gamma3"})
        CHECK(row[col] == "0");
    CHECK(row["diff21"] == "-1");

    r = run({"eval", "--extremal", "diff-lower", "--beta", "0"});
    CHECK(first_row(r.out)["diff32"] == "-0.57735026919");

    r = run({"eval", "--a2", "2", "0", "--a3", "3", "--a4", "4"});
    CHECK(first_row(r.out)["A4"] == "14");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bounds", "--beta", "0:2:3"}).code == 2);
    CHECK(run({"bounds", "--beta", "0:1:0"}).code == 2);
    CHECK(run({"bounds", "--beta", "abc"}).code == 2);
    CHECK(run({"bounds", "--beta", "1:0:3"}).code == 2);
    CHECK(run({"bounds", "--fs", "--mu", "-1"}).code == 2);
    CHECK(run({"bounds", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "--theorem", "thm9.9"}).code == 2);
    CHECK(run({"verify", "--theorem", "lemma2.1", "--b1", "0"}).code == 2);
    CHECK(run({"verify", "--theorem", "thm3.1", "--grid", "1"}).code == 2);
    CHECK(run({"eval", "--extremal", "f9"}).code == 2);
    CHECK(run({"search", "--functional", "gamma9"}).code == 2);
    CHECK(run({"search"}).code == 2);
    const auto r = run({"bounds", "--beta", "7"});
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("help exits with 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify exit codes and rows") {
    auto r = run({"verify", "--theorem", "thm3.2", "--beta", "0"});
    CHECK(r.code == 0);
    auto row = first_row(r.out);
    CHECK(row["status"] == "PASS");
    CHECK(row["upper"] == "0.666666666667");
    CHECK(row["lower"] == "-0.57735026919");

    r = run({"verify", "--theorem", "lemma2.1", "--b1", "1", "--b2", "3", "0", "--b3", "1"});
    CHECK(r.code == 0);
    CHECK(first_row(r.out)["upper"] == "12");

    r = run({"verify", "--theorem", "thm2.1", "--beta", "0:1:5"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 16);

    // A grid too coarse to reach the bound is reported as a failure, not an error.
    r = run({"verify", "--theorem", "thm3.2", "--beta", "0", "--grid", "2", "--refine", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("search") {
    const auto r = run({"search", "--functional", "gamma1", "--beta", "0"});
    REQUIRE(r.code == 0);
    auto row = first_row(r.out);
    CHECK(row["optimum"] == "0.5");
    CHECK(row["c1"] == "2");
    CHECK(row["direction"] == "max");
}

TEST_CASE("json output round-trips byte for byte") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "bounds", "--beta", "0:1:4"},
             {"--format", "json", "eval", "--extremal", "f2", "--beta", "0.3"},
             {"--format", "json", "verify", "--theorem", "thm3.1", "--beta", "0.25"},
             {"--format", "json", "search", "--functional", "A3", "--beta", "0.5", "--grid", "11"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        const auto doc = nlohmann::ordered_json::parse(r.out);
        CHECK(doc.dump(2) + "\n" == r.out);
        CHECK(doc.begin().key() == "command");
        CHECK(doc.contains("params"));
        CHECK((doc.contains("rows") || doc.contains("reports")));
    }
    const auto v = nlohmann::json::parse(run({"--format", "json", "verify", "--theorem", "thm3.1"}).out);
    const auto& rep = v["reports"][0];
    for (const char* key : {"theorem_id", "params", "bound", "oracle_max", "oracle_min", "witness_upper",
                            "no_violation", "sharp", "witness_attains", "status"})
        CHECK(rep.contains(key));
    CHECK(rep["status"] == "PASS");
}

TEST_CASE("output is deterministic and can go to a file") {
    const std::vector<std::string> args{"verify", "--theorem", "thm2.2", "--beta", "0:1:3"};
    CHECK(run(args).out == run(args).out);

    const std::string path = "test_cli_out.csv";
    auto with_out = args;
    with_out.insert(with_out.begin(), {"--out", path});
    const auto r = run(with_out);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run(args).out);
    std::remove(path.c_str());

    CHECK(run({"--out", "/nonexistent/dir/x.csv", "bounds"}).code == 2);
}

TEST_CASE("CSV headers match the shipped schema") {
    std::ifstream in(ABETA_CSV_SCHEMA);
    REQUIRE(in);
    const auto schema = nlohmann::json::parse(in);
    const std::map<std::string, std::vector<std::string>> commands = {
        {"bounds", {"bounds", "--beta", "0"}},
        {"bounds_fs", {"bounds", "--fs", "--lambda", "1", "--mu", "0"}},
        {"verify", {"verify", "--theorem", "thm2.1", "--beta", "0"}},
        {"eval", {"eval", "--extremal", "f1", "--beta", "0"}},
        {"search", {"search", "--functional", "gamma1"}},
    };
    for (const auto& [key, args] : commands) {
        CAPTURE(key);
        REQUIRE(schema.contains(key));
        std::string expected;
        for (const auto& col : schema[key]) expected += (expected.empty() ? "" : ",") + col["name"].get<std::string>();
        const auto r = run(args);
        REQUIRE(r.code == 0);
        CHECK(r.out.substr(0, r.out.find('\n')) == expected);
    }
}
