#include <doctest.h>

#include "golden_cases.hpp"

using golden::invoke;

TEST_CASE("cli output matches golden files byte for byte")
{
    const auto cases = golden::load_cases();
    REQUIRE(cases.size() >= 8);
    for (const auto& c : cases) {
        CAPTURE(c.name);
        auto r = invoke(c.args);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        CHECK(r.out == golden::slurp(c.name + ".out"));
    }
}

TEST_CASE("cli output is deterministic across runs")
{
    for (const auto& c : golden::load_cases()) {
        CAPTURE(c.name);
        CHECK(invoke(c.args).out == invoke(c.args).out);
    }
}

TEST_CASE("cli input errors exit 1 with a message and no records")
{
    for (const auto& args : golden::bad_inputs()) {
        std::string joined;
        for (const auto& a : args)
            joined += a + ' ';
        CAPTURE(joined);
        auto r = invoke(args);
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK(!r.err.empty());
    }
}

TEST_CASE("type errors name the offending descriptor")
{
    auto r = invoke({"exists", "--type", "2,3", "--degree", "2"});
    CHECK(r.err.find("2,3") != std::string::npos);
    r = invoke({"classify", "--type", "|2", "--monodromy", "(1 2 1)"});
    CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("verify paths agree on a spread of inputs")
{
    for (std::string type : {"|2", "|3", "|6", "4|3,5", "2,2|7"}) {
        for (std::string r : {"1", "2", "3", "5", "6"}) {
            CAPTURE(type);
            CAPTURE(r);
            auto res = invoke({"exists", "--type", type, "--degree", r, "--verify", "6"});
            CHECK(res.code == 0);
            CHECK(res.out.find("agrees=false") == std::string::npos);
        }
    }
    auto res = invoke({"classify", "--type", "3|2", "--monodromy", "(1 2 3 4)(5 6 7)", "--verify", "10"});
    CHECK(res.code == 0);
    CHECK(res.out.find("agrees=true") != std::string::npos);
}
