#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "compstat/oracle.hpp"
#include "json.hpp"

using namespace compstat;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> csv_values(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::string> values;
    while (std::getline(in, line)) values.push_back(line.substr(line.rfind(',') + 1));
    return values;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("table examples") {
    auto r = run({"table", "--class", "palindromes", "--set", "N", "--stat", "count", "--n-max", "6"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("n,value\n", 0) == 0);
    CHECK(csv_values(r.out) == Strings{"1", "1", "2", "2", "4", "4", "8"});

    r = run({"table", "--class", "compositions", "--set", "1", "--stat", "rises", "--n-max", "5"});
    CHECK(csv_values(r.out) == Strings(6, "0"));

    r = run({"table", "--class", "partitions", "--set", "1,2", "--stat", "drops", "--n-max", "5"});
    CHECK(csv_values(r.out) == Strings{"0", "0", "0", "1", "1", "2"});
}

TEST_CASE("joint csv header and order") {
    auto r = run({"table", "--class", "compositions", "--set", "1,2", "--stat", "joint", "--n-max", "3"});
    CHECK(r.out ==
          "n,m,rises,levels,drops,count\n"
          "0,0,0,0,0,1\n"
          "1,1,0,0,0,1\n"
          "2,1,0,0,0,1\n"
          "2,2,0,1,0,1\n"
          "3,2,0,0,1,1\n"
          "3,2,1,0,0,1\n"
          "3,3,0,2,0,1\n");
}

TEST_CASE("gf examples") {
    CHECK(run({"gf", "--class", "compositions", "--set", "1", "--n-max", "2"}).out == "1 + x*y + x^2*y^2*l\n");
    auto carlitz = run({"gf", "--class", "carlitz", "--set", "1,2", "--n-max", "3"}).out;
    CHECK(carlitz.find("x^3*y^2*r") != std::string::npos);
    CHECK(carlitz.find("x^3*y^2*d") != std::string::npos);
    CHECK(run({"gf", "--class", "compositions", "--set", "N", "--n-max", "3", "--at", "y=1,r=1,l=1,d=1"}).out ==
          "1 + x + 2*x^2 + 4*x^3\n");
}

TEST_CASE("joint json round-trips to the oracle distribution") {
    for (auto cls : kAllClasses) {
        std::string name(class_name(cls));
        auto r = run({"table", "--class", name, "--set", "1,2,3", "--stat", "joint", "--n-max", "9", "--format",
                      "json"});
        REQUIRE(r.code == 0);
        json doc = json::parse(r.out);
        CHECK(doc["query"]["class"] == name);
        std::map<int, std::map<StatKey, std::uint64_t>> got;
        for (const auto& row : doc["rows"]) {
            StatKey k{row["m"].get<int>(), row["rises"].get<int>(), row["levels"].get<int>(),
                      row["drops"].get<int>()};
            got[row["n"].get<int>()][k] = row["count"].get<std::uint64_t>();
        }
        for (int n = 0; n <= 9; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            CHECK(got[n] == oracle::joint_distribution(cls, PartSet::parse("1,2,3"), n).counts);
        }
    }
}

TEST_CASE("large values are exact") {
    auto r = run({"table", "--class", "compositions", "--stat", "count", "--n-max", "40", "--format", "json"});
    json doc = json::parse(r.out);
    CHECK(doc["rows"].back()["value"].dump() == "549755813888");
    auto m = run({"table", "--class", "compositions", "--stat", "rises", "--moment", "--n-max", "40"});
    CHECK(m.code == 0);
    CHECK(csv_values(m.out).size() == 41);
}

TEST_CASE("output is deterministic") {
    Strings args{"check", "--suite", "all", "--n-max", "8"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Strings t{"table", "--class", "carlitz-palindromes", "--set", "odd", "--stat", "joint", "--n-max", "15",
              "--format", "text"};
    CHECK(run(t).out == run(t).out);
}

TEST_CASE("check suites") {
    for (const char* suite : {"oracle", "paths", "identities"}) {
        auto r = run({"check", "--suite", suite, "--n-max", "8"});
        CAPTURE(suite);
        CHECK(r.code == cli::kExitOk);
        CHECK(json::parse(r.out)["ok"] == true);
    }
    auto cat = run({"check", "--suite", "catalog", "--n-max", "20", "--format", "text"});
    CHECK(cat.code == 0);
    CHECK(cat.out.find("mismatch at x^3 [k=2]") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    for (const Strings& args : {
             Strings{},
             Strings{"bogus"},
             Strings{"table", "--class", "nope"},
             Strings{"table", "--set", "1,,2"},
             Strings{"table", "--n-max", "41"},
             Strings{"table", "--n-max", "-1"},
             Strings{"table", "--class", "carlitz", "--stat", "levels"},
             Strings{"table", "--class", "partitions", "--stat", "rises"},
             Strings{"table", "--stat", "joint", "--parts", "2"},
             Strings{"table", "--stat", "count", "--moment"},
             Strings{"table", "--stat", "rises", "--at", "r=1"},
             Strings{"table", "--at", "q=1"},
             Strings{"table", "--format", "xml"},
             Strings{"gf", "--at", "y=one"},
             Strings{"check", "--suite", "everything"},
             Strings{"check"},
         }) {
        CAPTURE(args.size() ? args.back() : std::string("<none>"));
        auto r = run(args);
        CHECK(r.code == cli::kExitUsage);
        CHECK(!r.err.empty());
        CHECK(r.out.empty());
    }
}

TEST_CASE("ceiling is configurable and help exits 0") {
    CHECK(run({"table", "--n-max", "45", "--ceiling", "50"}).code == 0);
    auto h = run({"table", "--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("--stat") != std::string::npos);
}
