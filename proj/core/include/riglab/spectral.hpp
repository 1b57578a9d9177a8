#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "riglab/real_matrix.hpp"
#include "riglab/sign_matrix.hpp"

namespace riglab {

struct OrthonormalFactor {
    RealMatrix d; // n x r, orthonormal columns
    RealMatrix e; // r x n, with ||E||_F = ||Htilde||_F
    std::size_t rank = 0;
};

/// Factors Htilde^* = D * E with orthonormal-column D spanning the column
/// space of Htilde^* (= row space of Htilde). Gram-Schmidt with
/// reorthogonalization; rank matches the numerical rank at rel_tol.
OrthonormalFactor orthonormal_factor(const RealMatrix& htilde, double rel_tol = 1e-8);

struct SpectralLink {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false; // lhs <= rhs + tolerance
};

struct SpectralReport {
    std::size_t n = 0;
    std::size_t r = 0;
    double lhs_sum_inner = 0.0; // sum_i <H_i, Htilde_i>, rows normalized
    double rhs_cs = 0.0;        // sqrt(r * n), the trace-chain ceiling
    double sum_squares = 0.0;   // sum_i |<H_i, Htilde_i>|^2
    double quantum_rhs = 0.0;   // r
    std::vector<SpectralLink> links;
    std::vector<std::size_t> zero_rows; // contribute 0 to both sums
    bool dominance_witness = false;     // sqrt(n * sum_squares) < rhs_cs strictly
    bool pass = false;
    nlohmann::json to_json() const;
};

/// The trace/Cauchy-Schwarz chain on row-normalized matrices:
///   sum_i <H_i, Ht_i> = Tr(H Ht^*) = Tr(H D E) <= ||H D||_F ||E||_F
///                     = ||D||_F ||E||_F = sqrt(r) ||Ht||_F <= sqrt(r n),
/// recorded link by link, against the stronger sum-of-squares bound
/// sum_i |<H_i, Ht_i>|^2 <= r, whose Cauchy-Schwarz consequence
/// sum_i <H_i, Ht_i> <= sqrt(n * sum_squares) is also recorded. Zero rows
/// of Ht are flagged and contribute zero (then ||Ht||_F < sqrt(n) and the
/// F-norm link becomes a strict inequality).
SpectralReport spectral_chain_check(const SignMatrix& h, const RealMatrix& htilde);

} // namespace riglab
