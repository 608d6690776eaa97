#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = eocong::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

bool has_line(const std::string& s, const std::string& line) {
    for (const auto& l : lines(s))
        if (l == line) return true;
    return false;
}

}  // namespace

TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "families", "--limit", "500"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(1).rfind("families,pass,", 0) == 0);

    r = run({"verify", "--suite", "all", "--limit", "100"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 13);

    r = run({"verify", "--suite", "bogus"});
    CHECK(r.code == 2);
    CHECK(r.err.find("bogus") != std::string::npos);

    CHECK(run({"verify"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify clips sweeps to the truncation and says so") {
    const auto r = run({"verify", "--suite", "hecke", "--limit", "1000", "--order", "10", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["range_hi"].get<int>() < 1000);
    CHECK(j["rows"][0]["notes"].get<std::string>().find("p=13: 0 cases") != std::string::npos);
}

TEST_CASE("table") {
    auto r = run({"table", "--series", "eobar", "--order", "8"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).front() == "n,value");
    CHECK(lines(r.out).back() == "8,5");

    r = run({"table", "--series", "A", "--order", "14", "--mod", "4"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "14,2"));

    r = run({"table", "--series", "r113", "--order", "2"});
    CHECK(has_line(r.out, "2,4"));
    r = run({"table", "--series", "r133", "--order", "6"});
    CHECK(has_line(r.out, "6,4"));
    r = run({"table", "--series", "a", "--order", "1"});
    CHECK(has_line(r.out, "1,2"));
    r = run({"table", "--series", "b", "--order", "1", "--mod", "4"});
    CHECK(has_line(r.out, "1,2"));

    CHECK(run({"table", "--series", "eobar", "--order", "1382"}).code == 2);
    r = run({"table", "--series", "eobar", "--order", "5000", "--mod", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 5002);
    CHECK(run({"table", "--series", "eobar", "--order", "8", "--mod", "1"}).code == 2);
    CHECK(run({"table", "--series", "zeta", "--order", "8"}).code == 2);
    CHECK(run({"table", "--series", "A", "--order", "8", "--out", "/nonexistent-dir/t.csv"}).code == 2);
}

TEST_CASE("table --out writes the file") {
    const std::string path = "cli_table_test.csv";
    CHECK(run({"table", "--series", "eobar", "--order", "8", "--out", path}).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(lines(ss.str()).back() == "8,5");
    std::remove(path.c_str());
}

TEST_CASE("scan") {
    auto r = run({"scan", "--a-max", "25", "--n-max", "400"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).front() == "modulus,residue,trivial");
    for (const char* row : {"25,3,false", "25,13,false", "25,18,false", "25,23,false", "2,1,true"})
        CHECK(has_line(r.out, row));

    r = run({"scan", "--a-max", "1", "--n-max", "10"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 1);

    r = run({"scan", "--a-max", "49", "--n-max", "200"});
    for (const char* row : {"49,23,false", "49,30,false", "49,44,false"}) CHECK(has_line(r.out, row));
}

TEST_CASE("density") {
    auto r = run({"density", "--checkpoints", "10000,100000", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["ratio"].get<double>() < j["rows"][1]["ratio"].get<double>());

    r = run({"density", "--checkpoints", "100", "--format", "json"});
    CHECK(r.code == 0);
    const auto k = nlohmann::json::parse(r.out);
    CHECK(k["rows"][0]["odd"].get<int>() <= 24);
    CHECK(k["rows"][0]["odd_bound_holds"].get<bool>());

    CHECK(run({"density", "--checkpoints", "0"}).code == 2);
    CHECK(run({"density", "--checkpoints", "100", "--order", "50"}).code == 2);
    CHECK(run({"density"}).code == 2);
}

TEST_CASE("CSV and JSON carry the same numbers") {
    for (const std::vector<std::string>& base :
         {std::vector<std::string>{"density", "--checkpoints", "1000,5000"},
          std::vector<std::string>{"table", "--series", "b", "--order", "40"},
          std::vector<std::string>{"scan", "--a-max", "10", "--n-max", "50"},
          std::vector<std::string>{"verify", "--suite", "genus", "--limit", "300"}}) {
        auto csv_args = base, json_args = base;
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto csv = lines(run(csv_args).out);
        const auto j = nlohmann::ordered_json::parse(run(json_args).out);
        CHECK(j["command"] == base.front());
        CHECK(j["status"] == "pass");
        REQUIRE(j["rows"].size() + 1 == csv.size());
        for (std::size_t i = 0; i < j["rows"].size(); ++i) {
            std::string rebuilt;
            bool first = true;
            for (const auto& [key, value] : j["rows"][i].items()) {
                if (!first) rebuilt += ',';
                first = false;
                if (value.is_null()) continue;
                if (value.is_string()) {
                    const auto s = value.get<std::string>();
                    rebuilt += s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
                } else {
                    rebuilt += value.dump();
                }
            }
            CHECK(rebuilt == csv[i + 1]);
        }
    }
}
