#include <doctest.h>
#include <climits>
#include <functional>
#include <random>

#include "riglab/bounds.hpp"
#include "riglab/error.hpp"
#include "riglab/exact_matrix.hpp"
#include "riglab/rigidity.hpp"

using riglab::SignMatrix;

namespace {

/// Independent route: R_M(1) = (n^2 - max_{u,v in {+-1}^n} u^T M v) / 2,
/// by brute force over all sign vector pairs.
std::size_t rank1_by_bilinear_max(const SignMatrix& m) {
    const std::size_t n = m.order();
    long best = LONG_MIN;
    for (std::size_t ub = 0; ub < (std::size_t{1} << n); ++ub) {
        for (std::size_t vb = 0; vb < (std::size_t{1} << n); ++vb) {
            long value = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const int u = (ub >> i) & 1 ? 1 : -1;
                    const int v = (vb >> j) & 1 ? 1 : -1;
                    value += u * v * m.at(i, j);
                }
            best = std::max(best, value);
        }
    }
    return static_cast<std::size_t>((static_cast<long>(n * n) - best) / 2);
}

/// Exhaustive minimum over change patterns, using the feasibility decision.
std::size_t rank1_by_pattern_enumeration(const SignMatrix& m) {
    const std::size_t n = m.order();
    const std::size_t cells = n * n;
    for (std::size_t size = 0; size <= cells; ++size) {
        // enumerate all position subsets of the given size
        std::vector<std::size_t> idx(size);
        std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t at,
                                                                  std::size_t from) {
            if (at == size) {
                std::vector<std::pair<std::size_t, std::size_t>> changed;
                for (auto v : idx) changed.emplace_back(v / n, v % n);
                return riglab::rank1_completion_feasible(m, changed);
            }
            for (std::size_t v = from; v < cells; ++v) {
                idx[at] = v;
                if (place(at + 1, v + 1)) return true;
            }
            return false;
        };
        if (place(0, 0)) return size;
    }
    return cells;
}

} // namespace

TEST_SUITE("rigidity") {

TEST_CASE("rank-1 oracle on canonical inputs") {
    SignMatrix ones(3);
    CHECK(riglab::rank1_rigidity_exact(ones).value == 0); // already rank 1

    const auto h2 = SignMatrix::sylvester(1);
    CHECK(riglab::rank1_rigidity_exact(h2).value == 1);

    const auto h4 = SignMatrix::sylvester(2);
    const auto r4 = riglab::rank1_rigidity_exact(h4);
    CHECK(r4.value == 4); // equals n^2/4r at r = 1: the bound is tight here
    CHECK(riglab::rigidity_lower_bound({4, 1, std::nullopt}).value == 4);

    CHECK_THROWS_AS(riglab::rank1_rigidity_exact(SignMatrix(2), 1), riglab::Error); // cap
}

TEST_CASE("oracle value matches the bilinear-maximum route") {
    CHECK(rank1_by_bilinear_max(SignMatrix::sylvester(1)) == 1);
    CHECK(rank1_by_bilinear_max(SignMatrix::sylvester(2)) == 4);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        SignMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.set(i, j, (rng() & 1) ? 1 : -1);
        CHECK(riglab::rank1_rigidity_exact(m).value == rank1_by_bilinear_max(m));
    }
}

TEST_CASE("oracle witness is feasible and applies to the claimed weight") {
    const auto h4 = SignMatrix::sylvester(2);
    const auto result = riglab::rank1_rigidity_exact(h4);
    std::vector<std::pair<std::size_t, std::size_t>> changed;
    for (const auto& c : result.witness.changes()) changed.emplace_back(c.row, c.col);
    CHECK(riglab::rank1_completion_feasible(h4, changed));
    const auto applied = result.witness.apply(h4);
    CHECK(riglab::rank_exact(applied) == 1);
    CHECK(riglab::weight_diff(applied, riglab::to_exact(h4)) == result.value);
}

TEST_CASE("completion feasibility basics") {
    const auto h2 = SignMatrix::sylvester(1);
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) all.emplace_back(i, j);
    CHECK(riglab::rank1_completion_feasible(h2, all)); // everything free

    CHECK_FALSE(riglab::rank1_completion_feasible(h2, {})); // det(H_2) = -2 != 0

    CHECK(riglab::rank1_completion_feasible(h2, {{1, 1}})); // (1,1)(1,1)^T fits the rest

    CHECK_THROWS_AS(riglab::rank1_completion_feasible(h2, {{2, 0}}), riglab::Error);
}

TEST_CASE("oracle agrees with full pattern enumeration on small orders") {
    std::mt19937_64 rng(17);
    for (std::size_t n : {2u, 3u}) {
        for (int trial = 0; trial < 40; ++trial) {
            SignMatrix m(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.set(i, j, (rng() & 1) ? 1 : -1);
            const auto oracle = riglab::rank1_rigidity_exact(m);
            CHECK(oracle.value == rank1_by_pattern_enumeration(m));
            // no pattern of size value - 1 is feasible; spot-check via the
            // enumerator's minimality rather than re-walking all subsets
            if (oracle.value > 0) {
                std::vector<std::pair<std::size_t, std::size_t>> changed;
                for (const auto& c : oracle.witness.changes())
                    changed.emplace_back(c.row, c.col);
                changed.pop_back(); // strictly smaller subset of the witness
                CHECK_FALSE(riglab::rank1_completion_feasible(m, changed));
            }
        }
    }
}

TEST_CASE("upper search brackets H_4 at r = 2") {
    const auto h4 = SignMatrix::sylvester(2);
    const auto bracket = riglab::rank_r_upper_search(h4, 2, 16, 1);
    REQUIRE(bracket.upper.has_value());
    CHECK(*bracket.upper <= 4); // the diagonal shift witness has weight n
    CHECK(bracket.lower == doctest::Approx(2.0));
    CHECK(bracket.lower_exact == 2);
    REQUIRE(bracket.witness.has_value());

    // the emitted witness verifies independently
    const auto applied = bracket.witness->apply(h4);
    CHECK(riglab::weight_diff(applied, riglab::to_exact(h4)) == *bracket.upper);
    CHECK(riglab::numerical_rank(riglab::to_real(applied), 1e-7) <= 2);
}

TEST_CASE("search cannot beat the exact oracle at r = 1") {
    const auto h4 = SignMatrix::sylvester(2);
    riglab::SearchOptions opts;
    opts.seed_rank1_oracle = false; // make the search work for it
    const auto bracket = riglab::rank_r_upper_search(h4, 1, 48, 7, opts);
    REQUIRE(bracket.upper.has_value());
    CHECK(*bracket.upper >= 4);
    CHECK(bracket.exact == 4);
    CHECK(bracket.lower_exact == 4); // oracle value feeds the floor
}

TEST_CASE("already low rank means upper = 0") {
    SignMatrix ones(4);
    const auto bracket = riglab::rank_r_upper_search(ones, 2, 4, 1);
    REQUIRE(bracket.upper.has_value());
    CHECK(*bracket.upper == 0);
    CHECK(bracket.witness->weight() == 0);
}

TEST_CASE("search is deterministic per seed") {
    const auto h8 = SignMatrix::sylvester(3);
    const auto a = riglab::rank_r_upper_search(h8, 4, 8, 3);
    const auto b = riglab::rank_r_upper_search(h8, 4, 8, 3);
    CHECK(a.to_json(h8) == b.to_json(h8));
}

TEST_CASE("relaxed search respects theta") {
    const auto h4 = SignMatrix::sylvester(2);

    // theta = 2 admits the diagonal shift (sqrt(4) = 2 <= theta)
    const auto relaxed = riglab::relaxed_upper_search(h4, 2, 2.0, 16, 1);
    REQUIRE(relaxed.upper.has_value());
    CHECK(*relaxed.upper <= 4);
    CHECK(riglab::relaxed_rigidity_lower_bound_exact(4, 2, riglab::Rational(2)) == 1);
    CHECK(relaxed.lower_exact >= 1);
    if (relaxed.witness) {
        const auto applied = relaxed.witness->apply(h4); // theta cap checked exactly
        CHECK(riglab::numerical_rank(riglab::to_real(applied), 1e-7) <= 2);
    }

    // a huge theta reproduces the unclamped search outcome
    const auto unclamped = riglab::rank_r_upper_search(h4, 2, 16, 1);
    const auto loose = riglab::relaxed_upper_search(h4, 2, 100.0, 16, 1);
    CHECK(loose.upper == unclamped.upper);

    // theta -> 0+: nothing can change, so no witness exists for r < rank
    const auto frozen = riglab::relaxed_upper_search(h4, 2, 1e-6, 8, 1);
    CHECK_FALSE(frozen.upper.has_value());

    // ... unless the matrix already has rank <= r
    SignMatrix ones(4);
    const auto trivial = riglab::relaxed_upper_search(ones, 2, 1e-6, 4, 1);
    REQUIRE(trivial.upper.has_value());
    CHECK(*trivial.upper == 0);

    CHECK_THROWS_AS(riglab::relaxed_upper_search(h4, 2, 0.0, 4, 1), riglab::Error);
    CHECK_THROWS_AS(riglab::rank_r_upper_search(h4, 4, 4, 1), riglab::Error); // r < n required
}

TEST_CASE("hadamard brackets never undercut the proven bound") {
    std::mt19937_64 rng(23);
    for (std::size_t k : {2u, 3u}) {
        const auto h = SignMatrix::sylvester(k);
        for (std::size_t r = 1; 2 * r <= h.order(); r *= 2) {
            const auto bracket = riglab::rank_r_upper_search(h, r, 8, rng());
            const auto bound = riglab::rigidity_lower_bound({h.order(), r, std::nullopt});
            REQUIRE(bracket.upper.has_value());
            CHECK(riglab::Rational(static_cast<long>(*bracket.upper)) >= bound.value);
            CHECK(static_cast<double>(*bracket.upper) >= bracket.lower - 1e-12);
        }
    }
}

} // TEST_SUITE
