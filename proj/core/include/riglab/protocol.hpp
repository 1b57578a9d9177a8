#pragma once

#include <complex>
#include <cstddef>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "riglab/perturbation.hpp"
#include "riglab/real_matrix.hpp"
#include "riglab/sign_matrix.hpp"

namespace riglab {

/// Unit vector of complex amplitudes. Construction normalizes and rejects
/// the zero vector.
class StateVector {
  public:
    explicit StateVector(Eigen::VectorXcd amplitudes);
    static StateVector from_real(const Eigen::VectorXd& v);

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    std::complex<double> inner(const StateVector& other) const;

  private:
    Eigen::VectorXcd amps_;
};

/// Positive semidefinite operators summing to identity. Invariants are
/// checked at construction: min eigenvalue >= -1e-9 per element,
/// sum-to-identity within 1e-9 entrywise.
class Povm {
  public:
    static constexpr double kPsdTol = 1e-9;
    static constexpr double kCompletenessTol = 1e-9;

    Povm(std::size_t dim, std::vector<ComplexMatrix> elements);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); }
    const ComplexMatrix& element(std::size_t i) const { return elements_[i]; }

    /// <phi| E_i |phi>, clamped imaginary part checked to be negligible.
    double outcome_probability(const StateVector& state, std::size_t i) const;

  private:
    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> elements_;
};

/// Normalized rows of M as quantum states. Errors on all-zero rows,
/// naming the first offending row.
std::vector<StateVector> encode_rows(const RealMatrix& m);
std::vector<StateVector> encode_rows(const ComplexMatrix& m);

/// p_i = |<normalized H_i, normalized Htilde_i>|^2 per row.
/// Strict: zero rows of Htilde are an error here.
std::vector<double> success_probs(const SignMatrix& h, const RealMatrix& htilde);
std::vector<double> success_probs(const ComplexMatrix& h, const ComplexMatrix& htilde);

struct ProtocolReport {
    std::size_t n = 0;
    std::size_t r = 0;
    std::string rank_source; // "exact", "numerical", or "caller"
    std::vector<double> p;
    double p_avg = 0.0;
    double sum_p = 0.0;
    double nayak_rhs = 0.0;
    std::vector<std::size_t> zero_rows; // rows with p_i = 0 by convention
    bool pass = false; // p_avg <= r/n + 1e-9 and sum p_i <= r + 1e-6
    nlohmann::json to_json() const;
};

/// Average-success-probability check against r/n and the stronger
/// sum-of-squares form sum_i p_i <= r. Zero rows of htilde contribute
/// p_i = 0 and are flagged rather than rejected.
ProtocolReport verify_nayak(const SignMatrix& h, const RealMatrix& htilde, std::size_t r,
                            const std::string& rank_source = "caller");
ProtocolReport verify_nayak(const ComplexMatrix& h, const ComplexMatrix& htilde, std::size_t r,
                            const std::string& rank_source = "caller");

struct RowspaceIsometry {
    RealMatrix basis;  // n x r, orthonormal columns spanning the row space
    RealMatrix coords; // n x r; basis * coords.row(i)^T = normalized row i
    std::size_t rank = 0;
    std::vector<std::size_t> zero_rows; // coords rows left at zero
};

/// Orthonormal basis of the row space plus the coordinates of each
/// normalized row in that basis.
RowspaceIsometry rowspace_isometry(const RealMatrix& htilde, double rel_tol = 1e-8);

/// Measurement in the Hadamard basis pulled back into the row space:
/// E_i = basis^T |H_i><H_i| basis. Completeness follows from the
/// normalized Hadamard rows forming an orthonormal basis.
Povm hadamard_povm_in_rowspace(const SignMatrix& h, const RealMatrix& basis);

struct RegevChainReport {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<double> p;        // <phi_i| E_i |phi_i>
    std::vector<double> op_norm;  // ||E_i||, largest eigenvalue
    std::vector<double> tr;       // Tr(E_i)
    double tr_sum = 0.0;          // must equal r
    bool pass = false;
    std::vector<std::string> failures;
    nlohmann::json to_json() const;
};

/// Verifies p_i <= ||E_i|| <= Tr(E_i) per outcome and sum_i Tr(E_i) = r.
RegevChainReport regev_chain_check(const std::vector<StateVector>& states, const Povm& povm);

struct ThetaChainRow {
    std::size_t row = 0;
    std::size_t delta = 0;   // Hamming distance of the perturbed row
    double p = 0.0;          // |<H_i, Htilde_i>|^2, normalized
    double bound_sq = 0.0;   // c^2 (n - theta*delta)^2 / n
    double bound_lin = 0.0;  // c^2 (n - 2*theta*delta)
    double bound_final = 0.0; // (n - 2 theta delta) / (n + delta (theta^2 + 2 theta))
    bool vacuous = false;     // n - theta*delta < 0: chain not claimed
    bool final_link_vacuous = false; // n - 2*theta*delta < 0: last link trivial
    bool holds = true;
};

struct ThetaChainReport {
    std::size_t n = 0;
    double theta = 0.0;
    std::size_t weight = 0;
    std::vector<ThetaChainRow> rows;
    std::size_t vacuous_rows = 0;
    double p_avg = 0.0;
    double aggregate_bound = 0.0; // (n - 2 theta R/n) / (n + R (theta^2+2theta)/n)
    bool aggregate_holds = false;
    bool pass = false; // all non-vacuous rows hold and the aggregate holds
    nlohmann::json to_json() const;
};

/// Per-row inequality chain for a theta-capped perturbation:
///   p_i >= c^2 (n - theta d)^2 / n >= c^2 (n - 2 theta d)
///       >= (n - 2 theta d) / (n + d (theta^2 + 2 theta)),
/// plus the aggregate bound at average Hamming distance R/n. Rows with
/// n - theta d < 0 are reported vacuous, not failed; the last link is
/// only claimed when n - 2 theta d >= 0 (otherwise the final bound is
/// negative and holds trivially).
ThetaChainReport theta_chain_check(const SignMatrix& h, const Perturbation& pert);

} // namespace riglab
