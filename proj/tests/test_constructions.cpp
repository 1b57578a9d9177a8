#include <doctest.h>
#include <random>

#include "riglab/bounds.hpp"
#include "riglab/constructions.hpp"
#include "riglab/error.hpp"
#include "riglab/instances.hpp"

using riglab::ExactScalar;
using riglab::SignMatrix;

TEST_SUITE("constructions") {

TEST_CASE("perturbation validation") {
    using riglab::Change;
    using riglab::Perturbation;
    CHECK_THROWS_AS(Perturbation(2, {{0, 0, ExactScalar(0)}, {0, 0, ExactScalar(1)}}),
                    riglab::Error);
    CHECK_THROWS_AS(Perturbation(2, {{2, 0, ExactScalar(0)}}), riglab::Error);

    // theta cap is checked exactly against the base at application time
    const auto h2 = SignMatrix::sylvester(1);
    Perturbation capped(2, {{0, 0, ExactScalar(-1)}}, 2.0); // |-1 - 1| = 2, boundary
    CHECK(capped.apply(h2).at(0, 0) == ExactScalar(-1));
    Perturbation over(2, {{0, 0, ExactScalar(riglab::make_rational(-3, 2))}}, 2.0); // 5/2 > 2
    CHECK_THROWS_AS(over.apply(h2), riglab::Error);

    Perturbation noop(2, {{1, 1, ExactScalar(-1)}}); // same value as H_2(1,1)
    CHECK(noop.weight() == 1);                        // weight counts listed changes
    CHECK(noop.row_hamming(h2) == std::vector<std::size_t>{0, 0});
}

TEST_CASE("zero outside") {
    const auto h4 = SignMatrix::sylvester(2);

    const auto full = riglab::zero_outside(h4, {0, 1, 2, 3}, {0, 1, 2, 3});
    CHECK(full.pert.weight() == 0);
    CHECK(full.matrix == riglab::to_exact(h4));

    const auto one_row = riglab::zero_outside(h4, {0}, {0, 1, 2, 3});
    CHECK(riglab::rank_exact(one_row.matrix) == 1);
    CHECK(one_row.pert.weight() == 12);

    const auto block = riglab::zero_outside(h4, {0, 1}, {0, 1, 2});
    CHECK(riglab::rank_exact(block.matrix) == 2); // >= ceil(6/4)
    CHECK(block.pert.weight() == 10);
    CHECK(riglab::weight_diff(block.matrix, riglab::to_exact(h4)) == 10);

    CHECK_THROWS_AS(riglab::zero_outside(h4, {0, 0}, {1}), riglab::Error);
}

TEST_CASE("theta-capped perturbations keep every change inside the cap") {
    std::mt19937_64 rng(41);
    const auto h8 = SignMatrix::sylvester(3);
    for (double theta : {0.5, 2.0}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto pert = riglab::random_theta_perturbation(h8, theta, 10, rng);
            const riglab::RealMatrix diff = riglab::to_real(h8) - pert.apply_real(h8);
            CHECK(riglab::max_abs_entry(diff) <= theta);
        }
    }
}

TEST_CASE("zero outside preserves the kept submatrix rank") {
    std::mt19937_64 rng(3);
    const auto h8 = SignMatrix::sylvester(3);
    for (int trial = 0; trial < 25; ++trial) {
        const auto rows = riglab::random_nonempty_subset(8, rng);
        const auto cols = riglab::random_nonempty_subset(8, rng);
        const auto zo = riglab::zero_outside(h8, rows, cols);
        CHECK(riglab::rank_exact(zo.matrix) ==
              riglab::rank_exact(riglab::submatrix(riglab::to_exact(h8), rows, cols)));
        CHECK(zo.pert.weight() == 64 - rows.size() * cols.size());
    }
}

TEST_CASE("diagonal shift certificates for k = 1..4") {
    const std::size_t expected_rank[] = {1, 2, 4, 8};
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto h = SignMatrix::sylvester(k);
        const auto result = riglab::diagonal_shift(h);
        CHECK(riglab::rank_exact(result.matrix) == expected_rank[k - 1]);
        CHECK(result.pert.weight() == h.order());
        // sqrt(4) and sqrt(16) collapse to plain rationals
        if (k % 2 == 0) CHECK(result.matrix.extension() == 0);
        if (k % 2 == 1) CHECK(result.matrix.extension() == 2);
    }
}

TEST_CASE("diagonal shift rejects unsuitable inputs") {
    SignMatrix not_symmetric(2, {1, 1, -1, 1}); // Hadamard but not symmetric
    CHECK(riglab::is_hadamard(not_symmetric));
    CHECK_THROWS_AS(riglab::diagonal_shift(not_symmetric), riglab::Error);

    SignMatrix not_hadamard(2); // all ones
    CHECK_THROWS_AS(riglab::diagonal_shift(not_hadamard), riglab::Error);

    // plus sign works too and lands on the complementary eigenspace
    const auto h4 = SignMatrix::sylvester(2);
    const auto plus = riglab::diagonal_shift(h4, +1);
    CHECK(riglab::rank_exact(plus.matrix) == 2);
}

TEST_CASE("block decomposition of sylvester matrices") {
    const auto h8 = SignMatrix::sylvester(3);
    const auto dec = riglab::block_decompose(h8, 1);
    CHECK(dec.ok);
    CHECK(dec.grid_size == 4);
    CHECK(dec.sign_grid.size() == 16);
    // the sign grid reproduces H_4
    const auto h4 = SignMatrix::sylvester(2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(dec.sign_grid[i * 4 + j] == h4.at(i, j));

    const auto trivial = riglab::block_decompose(h8, 0);
    CHECK(trivial.ok);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(trivial.sign_grid[i * 8 + j] == h8.at(i, j));

    const auto whole = riglab::block_decompose(h8, 3);
    CHECK(whole.ok);
    CHECK(whole.grid_size == 1);
    CHECK(whole.sign_grid[0] == 1);

    for (std::size_t k = 0; k <= 4; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            CHECK(riglab::block_decompose(SignMatrix::sylvester(k), j).ok);

    CHECK_THROWS_AS(riglab::block_decompose(h8, 4), riglab::Error);
}

TEST_CASE("imported non-sylvester matrices verify false, not error") {
    auto shuffled = SignMatrix::sylvester(3);
    shuffled.flip(0, 0);
    const auto dec = riglab::block_decompose(shuffled, 1);
    CHECK_FALSE(dec.ok);
    CHECK(dec.mismatched_blocks >= 1);
}

TEST_CASE("block counting bound equals n^2/4r") {
    CHECK(riglab::midrijanis_lower_report(3, 2).value == 8);
    CHECK(riglab::midrijanis_lower_report(2, 1).value == 4);
    CHECK(riglab::midrijanis_lower_report(4, 4).value == 16);
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t r = 1; 2 * r <= (std::size_t{1} << k); r *= 2) {
            const auto report = riglab::midrijanis_lower_report(k, r);
            CHECK(report.matches);
            CHECK(report.per_block_floor == r);
        }
    }
    CHECK_THROWS_AS(riglab::midrijanis_lower_report(3, 3), riglab::Error); // not a power of two
    CHECK_THROWS_AS(riglab::midrijanis_lower_report(3, 8), riglab::Error); // r > n/2
}

} // TEST_SUITE
