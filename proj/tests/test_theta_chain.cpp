#include <doctest.h>
#include <random>

#include "riglab/error.hpp"
#include "riglab/instances.hpp"
#include "riglab/protocol.hpp"

using riglab::ExactScalar;
using riglab::SignMatrix;

TEST_SUITE("theta_chain") {

TEST_CASE("empty perturbation gives an all-equality chain") {
    const auto h4 = SignMatrix::sylvester(2);
    const riglab::Perturbation empty(4, {}, 1.0);
    const auto report = riglab::theta_chain_check(h4, empty);
    CHECK(report.pass);
    CHECK(report.vacuous_rows == 0);
    for (const auto& row : report.rows) {
        CHECK(row.delta == 0);
        CHECK(row.p == doctest::Approx(1.0));
        CHECK(row.bound_sq == doctest::Approx(1.0));
        CHECK(row.bound_lin == doctest::Approx(1.0));
        CHECK(row.bound_final == doctest::Approx(1.0));
    }
    CHECK(report.aggregate_bound == doctest::Approx(1.0));
}

TEST_CASE("single sign flip at theta = 2, worked numbers") {
    const auto h4 = SignMatrix::sylvester(2);
    // H_4(1,1) = -1 -> +1: a change of exactly theta = 2
    const riglab::Perturbation pert(4, {{1, 1, ExactScalar(1)}}, 2.0);
    const auto report = riglab::theta_chain_check(h4, pert);
    CHECK(report.pass);
    const auto& row = report.rows[1];
    CHECK(row.delta == 1);
    // <H_1, Ht_1> = 2, both rows have norm 2: p = (2/4)^2 = 1/4
    CHECK(row.p == doctest::Approx(0.25));
    CHECK(row.bound_sq == doctest::Approx(0.25)); // c^2 (4-2)^2/4 = (1/4)(4)/4
    CHECK(row.bound_lin == doctest::Approx(0.0)); // c^2 (4 - 4)
    CHECK(row.bound_final == doctest::Approx(0.0));
    CHECK_FALSE(row.vacuous);
}

TEST_CASE("theta cap violations are rejected") {
    const auto h4 = SignMatrix::sylvester(2);
    const riglab::Perturbation over(4, {{0, 0, ExactScalar(3)}}, 1.0);
    CHECK_THROWS_AS(riglab::theta_chain_check(h4, over), riglab::Error);
    const riglab::Perturbation uncapped(4, {{0, 0, ExactScalar(0)}});
    CHECK_THROWS_AS(riglab::theta_chain_check(h4, uncapped), riglab::Error);
}

TEST_CASE("sweep: 1000 random theta-capped perturbations of H_8 show no violation") {
    std::mt19937_64 rng(9);
    const auto h8 = SignMatrix::sylvester(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto pert = riglab::random_theta_perturbation(h8, 1.0, 8, rng);
        const auto report = riglab::theta_chain_check(h8, pert);
        CHECK(report.pass);
        CHECK(report.aggregate_holds);
    }
}

TEST_CASE("rows beyond the n - theta*delta regime are vacuous, not failures") {
    const auto h4 = SignMatrix::sylvester(2);
    // drive a full row to zero: delta = 4, theta = 2, n - theta*delta = -4
    std::vector<riglab::Change> changes;
    for (std::size_t j = 0; j < 4; ++j) changes.push_back({0, j, ExactScalar(0)});
    const riglab::Perturbation pert(4, std::move(changes), 2.0);
    const auto report = riglab::theta_chain_check(h4, pert);
    CHECK(report.vacuous_rows == 1);
    CHECK(report.rows[0].vacuous);
    CHECK(report.pass); // vacuous rows are excluded from the verdict
    CHECK(report.aggregate_holds);
}

} // TEST_SUITE
