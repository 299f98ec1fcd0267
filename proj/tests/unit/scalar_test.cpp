#include <doctest.h>

#include <limits>

#include "dcs/error.hpp"
#include "dcs/rng.hpp"
#include "dcs/scalar.hpp"

using dcs::Scalar;
using dcs::SplitMix64;

namespace {

// Random scalar spanning integers, moderate fractions and values near the
// int64 boundary, so both representations get exercised.
Scalar random_scalar(SplitMix64& rng) {
    switch (rng.next_below(4)) {
        case 0: return Scalar(rng.next_in(-1000, 1000));
        case 1: return Scalar::fraction(rng.next_in(-1000, 1000), rng.next_in(1, 60));
        case 2: return Scalar(rng.next_in(std::numeric_limits<std::int64_t>::min() / 2,
                                          std::numeric_limits<std::int64_t>::max() / 2));
        default:
            return Scalar::fraction(rng.next_in(std::numeric_limits<std::int64_t>::min() / 2,
                                                std::numeric_limits<std::int64_t>::max() / 2),
                                    rng.next_in(1, std::numeric_limits<std::int64_t>::max() / 2));
    }
}

}  // namespace

TEST_CASE("scalar canonical form") {
    CHECK(Scalar::fraction(2, 4) == Scalar::fraction(1, 2));
    CHECK(Scalar::fraction(1, -2) == Scalar::fraction(-1, 2));
    CHECK(Scalar::fraction(-4, -2) == Scalar(2));
    CHECK(Scalar::fraction(0, 7) == Scalar(0));
    CHECK_THROWS_AS(Scalar::fraction(1, 0), dcs::Error);
}

TEST_CASE("scalar text forms") {
    CHECK(Scalar(5).str() == "5");
    CHECK(Scalar(-17).str() == "-17");
    CHECK(Scalar::fraction(1, 2).str() == "0.5");
    CHECK(Scalar::fraction(3, 4).str() == "0.75");
    CHECK(Scalar::fraction(3, 20).str() == "0.15");
    CHECK(Scalar::fraction(-1, 8).str() == "-0.125");
    CHECK(Scalar::fraction(1, 3).str() == "1/3");
    CHECK(Scalar::fraction(-22, 7).str() == "-22/7");
    CHECK(Scalar::fraction(1, 1024).str() == "0.0009765625");
}

TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse("42") == Scalar(42));
    CHECK(Scalar::parse("-3") == Scalar(-3));
    CHECK(Scalar::parse("+7") == Scalar(7));
    CHECK(Scalar::parse("2.50") == Scalar::fraction(5, 2));
    CHECK(Scalar::parse("-0.125") == Scalar::fraction(-1, 8));
    CHECK(Scalar::parse("6/4") == Scalar::fraction(3, 2));
    CHECK(Scalar::parse("-7/3") == Scalar::fraction(-7, 3));
    CHECK(!Scalar::parse(""));
    CHECK(!Scalar::parse("."));
    CHECK(!Scalar::parse("1."));
    CHECK(!Scalar::parse(".5"));
    CHECK(!Scalar::parse("1/0"));
    CHECK(!Scalar::parse("1/-2"));
    CHECK(!Scalar::parse("1e3"));
    CHECK(!Scalar::parse("two"));
    CHECK(!Scalar::parse("1 2"));
}

TEST_CASE("scalar big values") {
    const std::int64_t min = std::numeric_limits<std::int64_t>::min();
    const std::int64_t max = std::numeric_limits<std::int64_t>::max();
    CHECK((-Scalar(min)).str() == "9223372036854775808");
    CHECK(Scalar(max) + Scalar(max) == *Scalar::parse("18446744073709551614"));
    CHECK(Scalar(min) - Scalar(max) == *Scalar::parse("-18446744073709551615"));

    auto huge = Scalar::parse("123456789012345678901234567890123456789");
    REQUIRE(huge);
    CHECK(*huge - *huge == Scalar(0));
    CHECK(*huge + Scalar(1) > *huge);
    CHECK(huge->str() == "123456789012345678901234567890123456789");

    // reduces across the int64 boundary and back
    auto big_frac = Scalar::parse("36893488147419103232/4");  // 2^65 / 4 = 2^63
    REQUIRE(big_frac);
    CHECK(big_frac->str() == "9223372036854775808");
    CHECK(*big_frac - Scalar(max) == Scalar(1));
}

TEST_CASE("scalar arithmetic matches gmp") {
    SplitMix64 rng(20260809);
    for (int round = 0; round < 3000; ++round) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        mpq_class qa = a.to_mpq();
        mpq_class qb = b.to_mpq();
        CHECK((a + b).to_mpq() == mpq_class(qa + qb));
        CHECK((a - b).to_mpq() == mpq_class(qa - qb));
        CHECK((a * b).to_mpq() == mpq_class(qa * qb));
        if (!(b == Scalar(0))) CHECK((a / b).to_mpq() == mpq_class(qa / qb));
        CHECK((a < b) == (qa < qb));
        CHECK((a == b) == (qa == qb));
        // round-trips through the text form exactly
        CHECK(Scalar::parse(a.str()) == a);
    }
}

TEST_CASE("scalar subtraction inverts addition") {
    SplitMix64 rng(99);
    for (int round = 0; round < 2000; ++round) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("scalar ordering is total") {
    SplitMix64 rng(7);
    std::vector<Scalar> samples;
    for (int i = 0; i < 30; ++i) samples.push_back(random_scalar(rng));
    for (const Scalar& a : samples)
        for (const Scalar& b : samples) {
            CHECK(((a < b) + (b < a) + (a == b)) == 1);  // trichotomy
            for (const Scalar& c : samples)
                if (a < b && b < c) CHECK(a < c);
        }
}
