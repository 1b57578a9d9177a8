#pragma once

#include <cstddef>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riglab/perturbation.hpp"
#include "riglab/rational.hpp"
#include "riglab/sign_matrix.hpp"

namespace riglab {

struct Rank1Result {
    std::size_t value = 0;  // minimal number of entries to change for rank <= 1
    Perturbation witness;   // replaces disagreeing entries with outer-product values
};

/// Exact rank-1 rigidity of a sign matrix by enumeration over sign vectors
/// u (u_0 = +1 by symmetry) with the optimal v picked per column as the
/// majority sign of u .* M_col. Sound because a rank-<=1 completion of a
/// +-1 matrix exists iff the fixed entries match some sign outer product:
/// on a connected component of fixed positions, |u_i||v_j| = 1 forces all
/// magnitudes to a common rescaling, which can be pushed into sign vectors
/// without changing any agreement. Capped at order max_order (2^n work).
Rank1Result rank1_rigidity_exact(const SignMatrix& m, std::size_t max_order = 20);

/// Decision form: can some rank-<=1 matrix agree with M outside `changed`?
/// Equivalent to balance of the signed bipartite graph whose edges are the
/// unchanged positions labeled by M's signs; decided by union-find with
/// parity.
bool rank1_completion_feasible(const SignMatrix& m,
                               const std::vector<std::pair<std::size_t, std::size_t>>& changed);

struct RigidityBracket {
    std::size_t n = 0;
    std::size_t r = 0;
    std::optional<double> theta;
    double lower = 0.0;          // best applicable proven bound
    Rational lower_exact{0};
    std::vector<std::string> lower_sources;
    std::optional<std::size_t> upper; // weight of best explicit witness; nullopt = none found
    std::optional<Perturbation> witness;
    std::optional<std::size_t> exact; // set when the r = 1 oracle applies
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    nlohmann::json to_json(const SignMatrix& base) const;
};

struct SearchOptions {
    std::size_t restarts = 50;
    std::size_t iterations = 500;
    double residual_tol = 1e-7;   // acceptance threshold for the masked fit
    double rank_rel_tol = 1e-7;   // numerical-rank certificate tolerance
    bool seed_constructions = true; // start from the known explicit witnesses
    bool seed_rank1_oracle = true;  // include the exact r = 1 witness when in reach
};

/// Heuristic upper-bound search: proposes change patterns (randomized and
/// residual-guided), fits a rank-r factorization to the unchanged entries
/// by alternating minimization, and emits an explicitly verified witness
/// when the masked residual drops below residual_tol. Deterministic per
/// seed; ties between witnesses break lexicographically by
/// (weight, pattern). Never a lower-bound statement: failures are
/// inconclusive.
RigidityBracket rank_r_upper_search(const SignMatrix& m, std::size_t r, std::size_t budget,
                                    std::uint64_t seed, const SearchOptions& options = {});

/// Same search with every change clamped to [M_ij - theta, M_ij + theta]
/// (projected alternating minimization). The bracket lower bound switches
/// to the relaxed-rigidity formula. With a tight theta the search may find
/// nothing; upper then stays empty (an infinity sentinel).
RigidityBracket relaxed_upper_search(const SignMatrix& m, std::size_t r, double theta,
                                     std::size_t budget, std::uint64_t seed,
                                     const SearchOptions& options = {});

} // namespace riglab
