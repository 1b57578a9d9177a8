#include <doctest.h>

#include "riglab/bounds.hpp"
#include "riglab/error.hpp"
#include "riglab/exact_matrix.hpp"
#include "riglab/submatrix_scan.hpp"

using riglab::ScanMode;
using riglab::SignMatrix;

TEST_SUITE("submatrix_scan") {

TEST_CASE("H_4 exhaustive: 225 pairs, no violations, tight somewhere") {
    const auto report =
        riglab::scan_all_submatrices(SignMatrix::sylvester(2), ScanMode::Exhaustive);
    CHECK(report.total_checked == 225); // (2^4 - 1)^2
    CHECK(report.violations.empty());
    CHECK(report.min_slack == 0); // e.g. a full row: rank 1 = ceil(n/n)
}

TEST_CASE("the 2x3 instance is tight") {
    const auto h4 = riglab::to_exact(SignMatrix::sylvester(2));
    const auto rank = riglab::rank_exact(riglab::submatrix(h4, {0, 1}, {0, 1, 2}));
    CHECK(rank == 2);
    CHECK(rank == riglab::submatrix_rank_bound(2, 3, 4));
}

TEST_CASE("H_8 sampled scan is clean and deterministic") {
    const auto h8 = SignMatrix::sylvester(3);
    const auto a = riglab::scan_all_submatrices(h8, ScanMode::Sampled, 1000, 1);
    CHECK(a.total_checked == 1000);
    CHECK(a.violations.empty());
    const auto b = riglab::scan_all_submatrices(h8, ScanMode::Sampled, 1000, 1);
    CHECK(a.to_json() == b.to_json()); // same seed, same report
    const auto c = riglab::scan_all_submatrices(h8, ScanMode::Sampled, 1000, 2);
    CHECK(c.violations.empty());
}

TEST_CASE("H_8 exhaustive needs an explicit cap raise") {
    const auto h8 = SignMatrix::sylvester(3);
    CHECK_THROWS_AS(riglab::scan_all_submatrices(h8, ScanMode::Exhaustive), riglab::Error);
    const auto raised =
        riglab::scan_all_submatrices(h8, ScanMode::Exhaustive, 0, 1, 65025);
    CHECK(raised.total_checked == 65025);
    CHECK(raised.violations.empty());
}

TEST_CASE("preconditions") {
    SignMatrix ones(2);
    CHECK_THROWS_AS(riglab::scan_all_submatrices(ones, ScanMode::Exhaustive), riglab::Error);
    CHECK_THROWS_AS(
        riglab::scan_all_submatrices(SignMatrix::sylvester(2), ScanMode::Sampled, 0, 1),
        riglab::Error);
}

} // TEST_SUITE
