#include <doctest.h>

#include <algorithm>
#include <random>

#include "solenoid/error.hpp"
#include "solenoid/typealg.hpp"

using namespace solenoid;

namespace {

SupernaturalExponent inf() { return SupernaturalExponent::infinity(); }
SupernaturalExponent fin(std::uint64_t v) { return SupernaturalExponent::finite(v); }

SolenoidType random_periodic(std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> entry(2, 30);
    std::uniform_int_distribution<int> len(0, 3);
    SolenoidType::Entries prefix(len(rng));
    SolenoidType::Entries period(len(rng) + 1);
    for (auto& w : prefix)
        w = entry(rng);
    for (auto& w : period)
        w = entry(rng);
    return SolenoidType(prefix, period);
}

} // namespace

TEST_CASE("parse grammar cases")
{
    auto a = parse_type("2|");
    CHECK(a.prefix() == SolenoidType::Entries{2});
    CHECK_FALSE(a.has_period());

    auto b = parse_type("|2");
    CHECK(b.prefix().empty());
    CHECK(b.period() == SolenoidType::Entries{2});

    auto c = parse_type(" 2 , 3 | 5 ,7 ");
    CHECK(c.prefix() == SolenoidType::Entries{2, 3});
    CHECK(c.period() == SolenoidType::Entries{5, 7});
    CHECK(format_type(c) == "2,3|5,7");
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_type("|"), ParseError);
    CHECK_THROWS_AS(parse_type("2,3"), ParseError);
    CHECK_THROWS_AS(parse_type("2||3"), ParseError);
    CHECK_THROWS_AS(parse_type("2,,3|5"), ParseError);
    CHECK_THROWS_AS(parse_type("2|5,"), ParseError);
    CHECK_THROWS_AS(parse_type("x|2"), ParseError);
    CHECK_THROWS_AS(parse_type("2 3|5"), ParseError);
    CHECK_THROWS_AS(parse_type("|99999999999999999999"), ParseError);
    CHECK_THROWS_AS(parse_type("1|2"), DomainError);
    CHECK_THROWS_AS(parse_type("|0"), DomainError);
    CHECK_THROWS_AS(SolenoidType({2}, SolenoidType::Entries{}), DomainError);
}

TEST_CASE("format round-trips through parse")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        auto t = random_periodic(rng);
        REQUIRE(parse_type(format_type(t)) == t);
    }
    CHECK(parse_type(format_type(parse_type("4,9|"))) == parse_type("4,9|"));
}

TEST_CASE("terms and stage products")
{
    auto t = parse_type("2,3|5,7");
    CHECK(t.term(1) == 2);
    CHECK(t.term(3) == 5);
    CHECK(t.term(4) == 7);
    CHECK(t.term(5) == 5);
    CHECK(t.term(1000) == 7);
    CHECK(t.stage_product(5).value() == 2 * 3 * 5 * 7 * 5);
    CHECK(t.product(4, 3).is_one());

    // the fast product agrees with multiplying term by term
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto ty = random_periodic(rng);
        Stage first = rng() % 12 + 1;
        Stage last = first + rng() % 15;
        arith::Factorization slow;
        for (Stage n = first; n <= last; ++n)
            slow *= arith::Factorization::of(ty.term(n));
        REQUIRE(ty.product(first, last) == slow);
    }

    auto finite = parse_type("2,3|");
    CHECK(finite.horizon() == Stage{2});
    CHECK_THROWS_AS(finite.term(3), HorizonError);
    CHECK_THROWS_AS(finite.stage_product(3), HorizonError);
}

TEST_CASE("supernatural numbers")
{
    CHECK(supernatural_of(parse_type("|2")) == SupernaturalNumber({{2, inf()}}));
    CHECK(supernatural_of(parse_type("6|10")) == SupernaturalNumber({{2, inf()}, {3, fin(1)}, {5, inf()}}));
    CHECK(supernatural_of(parse_type("4|3")) == SupernaturalNumber({{2, fin(2)}, {3, inf()}}));
    CHECK(supernatural_of(parse_type("6|10")).to_string() == "{2:inf,3:1,5:inf}");
    CHECK_THROWS_AS(supernatural_of(parse_type("2|")), HorizonError);
    CHECK_THROWS_AS(SupernaturalNumber({{4, inf()}}), DomainError);
}

TEST_CASE("supernatural number is invariant under period rotation")
{
    CHECK(supernatural_of(parse_type("2|3,5")) == supernatural_of(parse_type("2,3|5,3")));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        auto t = random_periodic(rng);
        auto period = *t.period();
        auto prefix = t.prefix();
        prefix.push_back(period.front());
        std::rotate(period.begin(), period.begin() + 1, period.end());
        REQUIRE(supernatural_of(t) == supernatural_of(SolenoidType(prefix, period)));
    }
}

TEST_CASE("tail coprimality")
{
    CHECK(tail_coprime(parse_type("|2"), 2).decision == Decision::DecidedFalse);
    CHECK(tail_coprime(parse_type("|2"), 3).decision == Decision::DecidedTrue);
    CHECK(tail_coprime(parse_type("6,6|5"), 6).decision == Decision::DecidedTrue);
    CHECK(tail_coprime(parse_type("2,9|"), 1).decision == Decision::DecidedTrue);
    CHECK_THROWS_AS(tail_coprime(parse_type("|2"), 0), DomainError);

    auto h = tail_coprime(parse_type("2,3|"), 2);
    CHECK(h.decision == Decision::HorizonLimited);
    CHECK(h.at_horizon);
    CHECK_FALSE(tail_coprime(parse_type("2,3|"), 3).at_horizon);

    CHECK(last_shared_stage(parse_type("6,6|5"), 6) == 2);
    CHECK(last_shared_stage(parse_type("6,7|5"), 6) == 1);
    CHECK(last_shared_stage(parse_type("|5"), 6) == 0);
}

TEST_CASE("tail coprimality is multiplicative")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        auto t = random_periodic(rng);
        REQUIRE(tail_coprime(t, 1).decided_true());
        for (std::uint64_t r = 1; r <= 12; ++r) {
            for (std::uint64_t s = 1; s <= 12; ++s) {
                bool both = tail_coprime(t, r).decided_true() && tail_coprime(t, s).decided_true();
                REQUIRE(tail_coprime(t, r * s).decided_true() == both);
            }
        }
    }
}

TEST_CASE("type equivalence")
{
    CHECK(types_equivalent(parse_type("|2"), parse_type("4|2")));
    CHECK_FALSE(types_equivalent(parse_type("|2"), parse_type("|3")));
    // {2:inf,3:1,5:inf} against {2:inf,3:inf,5:inf}
    CHECK(supernatural_of(parse_type("2|30")) == SupernaturalNumber({{2, inf()}, {3, inf()}, {5, inf()}}));
    CHECK_FALSE(types_equivalent(parse_type("6|10"), parse_type("2|30")));
    CHECK_THROWS_AS(types_equivalent(parse_type("2|"), parse_type("|2")), HorizonError);
}

TEST_CASE("type equivalence is an equivalence relation")
{
    std::mt19937_64 rng(23);
    std::vector<SolenoidType> pool;
    for (int i = 0; i < 40; ++i)
        pool.push_back(random_periodic(rng));
    pool.push_back(parse_type("|2"));
    pool.push_back(parse_type("8|4,2"));
    for (const auto& a : pool) {
        REQUIRE(types_equivalent(a, a));
        for (const auto& b : pool) {
            REQUIRE(types_equivalent(a, b) == types_equivalent(b, a));
            for (const auto& c : pool) {
                if (types_equivalent(a, b) && types_equivalent(b, c))
                    REQUIRE(types_equivalent(a, c));
            }
        }
    }
}
