#include <doctest.h>
#include <cmath>

#include "riglab/bounds.hpp"
#include "riglab/error.hpp"

using riglab::BoundQuery;
using riglab::Rational;

TEST_SUITE("bounds") {

TEST_CASE("valiant floor") {
    CHECK(riglab::valiant_floor({8, 2, std::nullopt}) == 6);
    CHECK(riglab::valiant_floor({4, 4, std::nullopt}) == 0);
    CHECK(riglab::valiant_floor({16, 1, std::nullopt}) == 15);
    CHECK_THROWS_AS(riglab::valiant_floor({4, 5, std::nullopt}), riglab::Error);
}

TEST_CASE("submatrix rank bound") {
    CHECK(riglab::submatrix_rank_bound(2, 3, 4) == 2); // ceil(6/4)
    CHECK(riglab::submatrix_rank_bound(4, 4, 4) == 4);
    CHECK(riglab::submatrix_rank_bound(1, 1, 4) == 1);
    CHECK_THROWS_AS(riglab::submatrix_rank_bound(5, 1, 4), riglab::Error);
}

TEST_CASE("rigidity lower bound n^2/4r") {
    const auto b = riglab::rigidity_lower_bound({8, 2, std::nullopt});
    CHECK(b.applicable);
    CHECK(b.value == 8);
    CHECK(b.kr_comparison == riglab::make_rational(64, 512));

    CHECK(riglab::rigidity_lower_bound({4, 1, std::nullopt}).value == 4);
    CHECK_FALSE(riglab::rigidity_lower_bound({4, 3, std::nullopt}).applicable); // needs r <= n/2
    CHECK(riglab::rigidity_lower_bound({4, 2, std::nullopt}).applicable);       // boundary r = n/2
}

TEST_CASE("relaxed rigidity bound values") {
    // 4^2 * 2 / (2*1*4 + 2*(1 + 2)) = 32/14 = 16/7
    CHECK(riglab::relaxed_rigidity_lower_bound_exact(4, 2, Rational(1)) ==
          riglab::make_rational(16, 7));
    CHECK(riglab::relaxed_rigidity_lower_bound({4, 2, 1.0}) == doctest::Approx(16.0 / 7.0));

    // n = r kills the numerator
    CHECK(riglab::relaxed_rigidity_lower_bound_exact(4, 4, Rational(3)) == 0);

    // 8^2 * 6 / (2*2*8 + 2*(4+4)) = 384/48 = 8
    CHECK(riglab::relaxed_rigidity_lower_bound_exact(8, 2, Rational(2)) == 8);

    CHECK_THROWS_AS(riglab::relaxed_rigidity_lower_bound({4, 2, std::nullopt}), riglab::Error);
    CHECK_THROWS_AS(riglab::relaxed_rigidity_lower_bound({4, 2, 0.0}), riglab::Error);
}

TEST_CASE("rational and float paths agree within 1e-12") {
    for (std::size_t n : {4u, 8u, 16u, 32u}) {
        for (std::size_t r = 1; r <= n; ++r) {
            for (double theta : {0.25, 0.5, 1.0, 2.0, 7.5}) {
                const double exact =
                    riglab::relaxed_rigidity_lower_bound_exact(n, r,
                                                               riglab::rational_from_double(theta))
                        .get_d();
                const double direct = riglab::relaxed_rigidity_lower_bound({n, r, theta});
                CHECK(std::abs(exact - direct) <= 1e-12 * std::max(1.0, std::abs(exact)));
            }
        }
    }
}

TEST_CASE("relaxed bound is monotone decreasing in theta and r") {
    for (std::size_t n : {4u, 8u, 16u}) {
        for (std::size_t r = 1; r < n; ++r) {
            double prev = riglab::relaxed_rigidity_lower_bound({n, r, 0.125});
            for (double theta : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
                const double cur = riglab::relaxed_rigidity_lower_bound({n, r, theta});
                CHECK(cur <= prev + 1e-12);
                prev = cur;
            }
        }
        for (double theta : {0.5, 1.0, 2.0}) {
            double prev = riglab::relaxed_rigidity_lower_bound({n, 1, theta});
            for (std::size_t r = 2; r <= n; ++r) {
                const double cur = riglab::relaxed_rigidity_lower_bound({n, r, theta});
                CHECK(cur <= prev + 1e-12);
                prev = cur;
            }
        }
    }
}

TEST_CASE("theta regime split at n/r") {
    CHECK(riglab::theta_regime({8, 2, 4.0}) == riglab::ThetaRegime::KashinRazborov);
    CHECK(riglab::theta_regime({8, 2, 1.0}) == riglab::ThetaRegime::Lokam);
    // the boundary theta = n/r belongs to the >= branch
    CHECK(riglab::theta_regime({8, 2, 4.0}) == riglab::ThetaRegime::KashinRazborov);
    CHECK(std::string(riglab::regime_shape(riglab::ThetaRegime::Lokam)) == "n(n-r)/theta");
}

TEST_CASE("nayak ceiling") {
    CHECK(riglab::nayak_bound(8, 2) == doctest::Approx(0.25));
    CHECK(riglab::nayak_bound(4, 4) == doctest::Approx(1.0));
    CHECK(riglab::nayak_bound(4, 8) == doctest::Approx(1.0)); // capped
}

TEST_CASE("report marks applicability and keeps values nonnegative") {
    const auto report = riglab::evaluate_bounds({4, 3, 0.5});
    bool saw_inapplicable = false;
    for (const auto& e : report.entries) {
        if (!e.applicable) saw_inapplicable = true;
        CHECK(e.value >= 0);
    }
    CHECK(saw_inapplicable); // r > n/2 disables the n^2/4r entry

    const auto json = report.to_json();
    CHECK(json.at("query").at("n") == 4);
    CHECK(json.at("bounds").is_array());
}

} // TEST_SUITE
