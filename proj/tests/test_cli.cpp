#include <doctest.h>

#include <sstream>

#include "apcore/cli.hpp"
#include "apcore/genfun.hpp"

using namespace apcore;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("count")
{
    auto r = call({"count", "--s", "3", "--t", "4"});
    CHECK(r.code == cli::Success);
    CHECK(contains(r.out, "hooks: {3, 7, ...}"));
    CHECK(contains(r.out, "route: closed-form"));
    CHECK(contains(r.out, "count: 11"));

    r = call({"count", "--s", "2", "--t", "3", "--p", "1"});
    CHECK(r.code == cli::Success);
    CHECK(contains(r.out, "count: 3"));
    CHECK(contains(r.out, "route: brute-force"));

    r = call({"count", "--s", "3", "--t", "4", "--p", "100"});
    CHECK(contains(r.out, "count: 11"));

    r = call({"count", "--s", "4", "--t", "2", "--max-n", "5", "--format", "csv"});
    CHECK(r.code == cli::Success);
    const auto c = gf_four_mod(0, 5);
    std::string expected = "n,coefficient\n";
    for (std::size_t n = 0; n <= 5; ++n)
        expected += std::to_string(n) + "," + c[n].get_str() + "\n";
    CHECK(r.out == expected);

    r = call({"count", "--s", "3", "--t", "4", "--format", "json", "--no-timestamp"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["count"] == 11);
    CHECK(doc["schema"] == 1);
    CHECK_FALSE(doc["meta"].contains("timestamp"));
}

TEST_CASE("usage errors")
{
    CHECK(call({"count", "--s", "4", "--t", "2"}).code == cli::UsageError);
    CHECK(call({"count", "--s", "4"}).code == cli::UsageError);
    CHECK(call({"count", "--s", "0", "--t", "2"}).code == cli::UsageError);
    CHECK(call({}).code == cli::UsageError);
    CHECK(call({"bogus"}).code == cli::UsageError);
    CHECK(call({"verify", "nonsense"}).code == cli::UsageError);
    CHECK(call({"verify", "dream", "--p", "4"}).code == cli::UsageError);
    CHECK(call({"genfun", "--s", "2", "--t", "3", "--format", "xml"}).code == cli::UsageError);
    CHECK(call({"abacus", "1,2"}).code == cli::UsageError);
    const auto r = call({"count", "--s", "4", "--t", "2"});
    CHECK(contains(r.err, "--max-n"));
}

TEST_CASE("genfun output")
{
    auto r = call({"genfun", "--s", "2", "--t", "3", "--trunc", "5"});
    CHECK(r.code == cli::Success);
    CHECK(r.out == "n,coefficient\n0,1\n1,1\n2,0\n3,1\n4,0\n5,0\n");

    r = call({"genfun", "--s", "2", "--t", "3", "--trunc", "0"});
    CHECK(r.out == "n,coefficient\n0,1\n");

    const std::vector<std::string> args{"genfun", "--s", "6", "--t", "9", "--trunc", "30", "--format", "json",
                                        "--no-timestamp"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["meta"]["trunc"] == 30);
    CHECK(doc["meta"]["route"] == "composite");
    REQUIRE(doc["rows"].size() == 31);
    const auto series = gf_composite(6, 9, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
        REQUIRE(doc["rows"][n][0] == n);
        REQUIRE(doc["rows"][n][1] == series[n].get_si());
    }

    const auto stamped = nlohmann::json::parse(call({"genfun", "--s", "2", "--t", "3", "--format", "json"}).out);
    CHECK(stamped["meta"].contains("timestamp"));
}

TEST_CASE("large coefficients become strings")
{
    std::vector<BigInt> c{BigInt(1), BigInt("123456789012345678901234567890")};
    const auto doc = cli::series_json(TruncatedSeries(c, 1), nlohmann::json::object());
    CHECK(doc["rows"][0][1] == 1);
    CHECK(doc["rows"][1][1] == "123456789012345678901234567890");
}

TEST_CASE("verify")
{
    auto r = call({"verify", "dream", "--p", "3", "--k", "2", "--l", "1", "--trunc", "100"});
    CHECK(r.code == cli::Success);
    CHECK(contains(r.out, "PASS dream congruence p=3 k=2 l=1 [verified to order 100]"));

    r = call({"verify", "conjecture2", "--tmax", "6"});
    CHECK(r.code == cli::Success);
    CHECK(contains(r.out, "INFO f_2(-3) = 0 (root)"));

    r = call({"verify", "f-recurrence"});
    CHECK(r.code == cli::Success);
    CHECK(contains(r.out, "PASS"));

    // the catalogue contains a refuted entry
    r = call({"verify", "--catalogue", "--trunc", "300"});
    CHECK(r.code == cli::Refuted);
    CHECK(contains(r.out, "FAIL c_{6(9)}(16n+12) = 0 mod 2"));
    CHECK(contains(r.out, "refuted at n=28 (c = 37)"));
    CHECK(contains(r.out, "PASS c_{4(2)}(11j+9) = 0"));
}

TEST_CASE("scan")
{
    auto r = call({"scan", "--s", "4", "--t", "2", "--mod", "0", "--amax", "11", "--trunc", "500"});
    CHECK(r.code == cli::Success);
    CHECK(contains(r.out, "# heuristic"));
    CHECK(contains(r.out, "c(11n+9) = 0"));

    r = call({"scan", "--s", "4", "--t", "2", "--mod", "2", "--amax", "11", "--trunc", "500", "--format", "json",
              "--no-timestamp"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["meta"]["heuristic"] == true);
    bool found = false;
    for (const auto& row : doc["rows"])
        if (row["period"] == 11)
            for (const auto& b : row["residues"])
                found = found || b == 2;
    CHECK(found);

    CHECK(call({"scan", "--s", "4", "--t", "2", "--amax", "60", "--trunc", "500"}).code == cli::UsageError);
}

TEST_CASE("fayers")
{
    auto r = call({"fayers", "--t", "3"});
    CHECK(contains(r.out, "f_3(s) = s^2 + 9s + 14"));
    r = call({"fayers", "--t", "1"});
    CHECK(contains(r.out, "f_1(s) = 1"));
    r = call({"fayers", "--t", "2", "--s", "5"});
    CHECK(contains(r.out, "f_2(5) = 8"));
    CHECK(contains(r.out, "2^(s-t) f_t(s)/t! = 32"));
    CHECK(contains(r.out, "binomial-sum count = 32"));
    r = call({"fayers", "--t", "4", "--s", "2"});
    CHECK(contains(r.out, "infinitely many"));
}

TEST_CASE("abacus")
{
    auto r = call({"abacus", "5,3,3"});
    CHECK(r.code == cli::Success);
    CHECK(r.out == "partition: (5,3,3)\nbeads: 3 4 7\no . o . .\no . o o .\no . . . .\n");
    r = call({"abacus", "2,1", "--d", "2"});
    CHECK(contains(r.out, "beads: 1 3"));
}
