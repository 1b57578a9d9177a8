#include <doctest.h>
#include <random>

#include "riglab/error.hpp"
#include "riglab/exact_scalar.hpp"

using riglab::ExactScalar;
using riglab::Rational;

TEST_SUITE("exact_scalar") {

TEST_CASE("sqrt normalization folds square factors") {
    const auto r8 = ExactScalar::sqrt_of(8); // 2*sqrt(2)
    CHECK(r8.extension() == 2);
    CHECK(r8.radical_part() == 2);
    CHECK(r8.rational_part() == 0);

    const auto r16 = ExactScalar::sqrt_of(16); // rational 4
    CHECK(r16.is_rational());
    CHECK(r16.rational_part() == 4);

    CHECK(ExactScalar::sqrt_of(1) == ExactScalar(1));
    CHECK(ExactScalar::sqrt_of(0).is_zero());

    // d = 12 folds to 2*sqrt(3)
    const ExactScalar x(Rational(0), Rational(1), 12);
    CHECK(x.extension() == 3);
    CHECK(x.radical_part() == 2);
}

TEST_CASE("conjugate product and inverse") {
    const auto r2 = ExactScalar::sqrt_of(2);
    const ExactScalar one(1);
    CHECK((one + r2) * (one - r2) == ExactScalar(-1));
    CHECK((one + r2) * (one + r2).inverse() == one);
    CHECK_THROWS_AS(ExactScalar(0).inverse(), riglab::Error);
}

TEST_CASE("mixed extensions are rejected, rationals mix freely") {
    const auto r2 = ExactScalar::sqrt_of(2);
    const auto r3 = ExactScalar::sqrt_of(3);
    CHECK_THROWS_AS(r2 + r3, riglab::Error);
    CHECK((r2 + ExactScalar(5)).extension() == 2);
    CHECK((r2 - r2).is_rational()); // collapses back to d = 0
}

TEST_CASE("exact sign in the real embedding") {
    const auto r2 = ExactScalar::sqrt_of(2);
    CHECK((ExactScalar(1) - r2).sign() == -1); // 1 - 1.414...
    CHECK((r2 - ExactScalar(1)).sign() == 1);
    CHECK((ExactScalar(3) - r2 - r2).sign() == 1);  // 3 - 2.83
    CHECK((ExactScalar(2) - r2).abs() == ExactScalar(2) - r2);
    CHECK((r2 - ExactScalar(2)).abs() == ExactScalar(2) - r2);
    CHECK(ExactScalar(0).sign() == 0);
}

TEST_CASE("token format round trip") {
    const ExactScalar plain(riglab::make_rational(-5, 3));
    CHECK(riglab::format_scalar_token(plain) == "-5/3");
    CHECK(riglab::parse_scalar_token("-5/3", 0) == plain);

    const ExactScalar quad(Rational(1), riglab::make_rational(-1, 2), 2);
    CHECK(riglab::format_scalar_token(quad) == "1/1+-1/2*rt");
    CHECK(riglab::parse_scalar_token("1/1+-1/2*rt", 2) == quad);

    CHECK(riglab::parse_scalar_token("7", 0) == ExactScalar(7));
    CHECK_THROWS_AS(riglab::parse_scalar_token("1/1+1/2*rt", 0), riglab::Error);
    CHECK_THROWS_AS(riglab::parse_scalar_token("nonsense", 0), riglab::Error);
    CHECK_THROWS_AS(riglab::parse_scalar_token("1/0", 0), riglab::Error);
}

namespace {

ExactScalar random_scalar(std::mt19937_64& rng, unsigned long d) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return ExactScalar(riglab::make_rational(num(rng), den(rng)),
                       riglab::make_rational(num(rng), den(rng)), d);
}

} // namespace

TEST_CASE("field axioms on randomized operands") {
    std::mt19937_64 rng(42);
    for (unsigned long d : {0ul, 2ul, 3ul, 5ul}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = random_scalar(rng, d);
            const auto y = random_scalar(rng, d);
            const auto z = random_scalar(rng, d);
            CHECK((x * y) * z == x * (y * z));
            CHECK((x + y) * z == x * z + y * z);
            CHECK(x + y == y + x);
            if (!x.is_zero()) CHECK(x * x.inverse() == ExactScalar(1));
            CHECK(std::abs(x.to_double() * y.to_double() - (x * y).to_double()) < 1e-9);
        }
    }
}

} // TEST_SUITE
