#include "riglab/protocol.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "riglab/bounds.hpp"
#include "riglab/error.hpp"

namespace riglab {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kIsometryTol = 1e-9;
constexpr double kSumTol = 1e-6;  // sum p_i <= r + kSumTol
constexpr double kAvgTol = 1e-9;  // p_avg <= r/n + kAvgTol
constexpr double kRegevTol = 1e-8;

} // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) throw Error("StateVector: empty amplitude vector");
    const double norm = amps_.norm();
    if (norm == 0.0) throw Error("StateVector: zero vector cannot be normalized");
    if (std::abs(norm - 1.0) > kNormTol) amps_ /= norm;
}

StateVector StateVector::from_real(const Eigen::VectorXd& v) {
    return StateVector(v.cast<std::complex<double>>());
}

std::complex<double> StateVector::inner(const StateVector& other) const {
    if (dim() != other.dim()) throw Error("StateVector: dimension mismatch");
    return amps_.dot(other.amps_); // conjugates *this
}

Povm::Povm(std::size_t dim, std::vector<ComplexMatrix> elements)
    : dim_(dim), elements_(std::move(elements)) {
    if (dim_ == 0) throw Error("Povm: dimension must be positive");
    if (elements_.empty()) throw Error("Povm: no elements");
    ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.rows() != static_cast<Eigen::Index>(dim_) ||
            e.cols() != static_cast<Eigen::Index>(dim_))
            throw Error("Povm: element " + std::to_string(i) + " has wrong shape");
        if ((e - e.adjoint()).cwiseAbs().maxCoeff() > kPsdTol)
            throw Error("Povm: element " + std::to_string(i) + " not Hermitian");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(e);
        if (eig.eigenvalues().minCoeff() < -kPsdTol)
            throw Error("Povm: element " + std::to_string(i) + " not positive semidefinite");
        sum += e;
    }
    const ComplexMatrix identity = ComplexMatrix::Identity(dim_, dim_);
    if ((sum - identity).cwiseAbs().maxCoeff() > kCompletenessTol)
        throw Error("Povm: elements do not sum to identity");
}

double Povm::outcome_probability(const StateVector& state, std::size_t i) const {
    if (state.dim() != dim_) throw Error("Povm: state dimension mismatch");
    if (i >= elements_.size()) throw Error("Povm: outcome index out of range");
    const std::complex<double> v =
        state.amplitudes().dot(elements_[i] * state.amplitudes());
    return v.real();
}

namespace {

template <typename Matrix>
std::vector<StateVector> encode_rows_impl(const Matrix& m) {
    std::vector<StateVector> states;
    states.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m.row(i).norm() == 0.0)
            throw Error("encode_rows: row " + std::to_string(i) + " is all zero");
        Eigen::VectorXcd amps = m.row(i).transpose().template cast<std::complex<double>>();
        states.emplace_back(std::move(amps));
    }
    return states;
}

// p_i for one pair of rows; zero htilde rows handled by the caller.
double row_success(const Eigen::VectorXcd& h_row, const Eigen::VectorXcd& ht_row) {
    const std::complex<double> inner = h_row.dot(ht_row);
    const double scale = h_row.norm() * ht_row.norm();
    const double v = std::abs(inner) / scale;
    return v * v;
}

template <typename MatrixH, typename MatrixT>
std::vector<double> success_probs_impl(const MatrixH& h, const MatrixT& ht, bool strict,
                                       std::vector<std::size_t>* zero_rows) {
    if (h.rows() != ht.rows() || h.cols() != ht.cols())
        throw Error("success_probs: shape mismatch");
    std::vector<double> p(static_cast<std::size_t>(h.rows()), 0.0);
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        if (ht.row(i).norm() == 0.0) {
            if (strict)
                throw Error("success_probs: row " + std::to_string(i) + " of the approximation "
                            "is all zero");
            if (zero_rows) zero_rows->push_back(static_cast<std::size_t>(i));
            continue; // conveys nothing; p_i = 0
        }
        const Eigen::VectorXcd hr = h.row(i).transpose().template cast<std::complex<double>>();
        const Eigen::VectorXcd tr = ht.row(i).transpose().template cast<std::complex<double>>();
        p[static_cast<std::size_t>(i)] = row_success(hr, tr);
    }
    return p;
}

template <typename MatrixH, typename MatrixT>
ProtocolReport verify_nayak_impl(const MatrixH& h, const MatrixT& ht, std::size_t r,
                                 const std::string& rank_source) {
    if (r == 0) throw Error("verify_nayak: rank must be positive");
    ProtocolReport report;
    report.n = static_cast<std::size_t>(h.rows());
    report.r = r;
    report.rank_source = rank_source;
    report.p = success_probs_impl(h, ht, /*strict=*/false, &report.zero_rows);
    report.sum_p = 0.0;
    for (double v : report.p) report.sum_p += v;
    report.p_avg = report.sum_p / static_cast<double>(report.n);
    report.nayak_rhs = nayak_bound(report.n, r);
    report.pass = (report.p_avg <= report.nayak_rhs + kAvgTol) &&
                  (report.sum_p <= static_cast<double>(r) + kSumTol);
    return report;
}

} // namespace

std::vector<StateVector> encode_rows(const RealMatrix& m) {
    return encode_rows_impl(m);
}

std::vector<StateVector> encode_rows(const ComplexMatrix& m) {
    return encode_rows_impl(m);
}

std::vector<double> success_probs(const SignMatrix& h, const RealMatrix& htilde) {
    return success_probs_impl(to_real(h), htilde, /*strict=*/true, nullptr);
}

std::vector<double> success_probs(const ComplexMatrix& h, const ComplexMatrix& htilde) {
    return success_probs_impl(h, htilde, /*strict=*/true, nullptr);
}

nlohmann::json ProtocolReport::to_json() const {
    return {{"n", n},
            {"r", r},
            {"rank_source", rank_source},
            {"p", p},
            {"p_avg", p_avg},
            {"sum_p", sum_p},
            {"nayak_rhs", nayak_rhs},
            {"zero_rows", zero_rows},
            {"pass", pass}};
}

ProtocolReport verify_nayak(const SignMatrix& h, const RealMatrix& htilde, std::size_t r,
                            const std::string& rank_source) {
    return verify_nayak_impl(to_real(h), htilde, r, rank_source);
}

ProtocolReport verify_nayak(const ComplexMatrix& h, const ComplexMatrix& htilde, std::size_t r,
                            const std::string& rank_source) {
    return verify_nayak_impl(h, htilde, r, rank_source);
}

RowspaceIsometry rowspace_isometry(const RealMatrix& htilde, double rel_tol) {
    if (htilde.norm() == 0.0) throw Error("rowspace_isometry: zero matrix");
    Eigen::JacobiSVD<RealMatrix> svd(htilde, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * sv(0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;

    RowspaceIsometry out;
    out.rank = static_cast<std::size_t>(r);
    out.basis = svd.matrixV().leftCols(r);
    out.coords = RealMatrix::Zero(htilde.rows(), r);
    for (Eigen::Index i = 0; i < htilde.rows(); ++i) {
        const double norm = htilde.row(i).norm();
        if (norm == 0.0) {
            out.zero_rows.push_back(static_cast<std::size_t>(i));
            continue;
        }
        out.coords.row(i) = (htilde.row(i) / norm) * out.basis;
    }
    return out;
}

Povm hadamard_povm_in_rowspace(const SignMatrix& h, const RealMatrix& basis) {
    const std::size_t n = h.order();
    if (basis.rows() != static_cast<Eigen::Index>(n))
        throw Error("hadamard_povm_in_rowspace: basis row count mismatch");
    if ((basis.transpose() * basis - RealMatrix::Identity(basis.cols(), basis.cols()))
            .cwiseAbs()
            .maxCoeff() > kIsometryTol)
        throw Error("hadamard_povm_in_rowspace: basis columns not orthonormal");

    const RealMatrix hr = to_real(h) / std::sqrt(static_cast<double>(n));
    std::vector<ComplexMatrix> elements;
    elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::VectorXd u = basis.transpose() * hr.row(i).transpose();
        const RealMatrix e = u * u.transpose();
        elements.push_back(e.cast<std::complex<double>>());
    }
    return Povm(static_cast<std::size_t>(basis.cols()), std::move(elements));
}

nlohmann::json RegevChainReport::to_json() const {
    return {{"n", n},          {"r", r},
            {"p", p},          {"op_norm", op_norm},
            {"tr", tr},        {"tr_sum", tr_sum},
            {"pass", pass},    {"failures", failures}};
}

RegevChainReport regev_chain_check(const std::vector<StateVector>& states, const Povm& povm) {
    if (states.size() != povm.size())
        throw Error("regev_chain_check: state count does not match POVM size");
    RegevChainReport report;
    report.n = states.size();
    report.r = povm.dim();
    report.pass = true;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].dim() != povm.dim())
            throw Error("regev_chain_check: state " + std::to_string(i) + " dimension mismatch");
        const double p = povm.outcome_probability(states[i], i);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(povm.element(i));
        const double norm = eig.eigenvalues().maxCoeff();
        const double trace = povm.element(i).trace().real();
        report.p.push_back(p);
        report.op_norm.push_back(norm);
        report.tr.push_back(trace);
        report.tr_sum += trace;
        if (p > norm + kRegevTol) {
            report.pass = false;
            report.failures.push_back("p_" + std::to_string(i) + " > operator norm");
        }
        if (norm > trace + kRegevTol) {
            report.pass = false;
            report.failures.push_back("||E_" + std::to_string(i) + "|| > trace");
        }
    }
    if (std::abs(report.tr_sum - static_cast<double>(report.r)) > kRegevTol) {
        report.pass = false;
        report.failures.push_back("sum of traces differs from r");
    }
    return report;
}

nlohmann::json ThetaChainReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
        rows_json.push_back({{"row", row.row},
                             {"delta", row.delta},
                             {"p", row.p},
                             {"bound_sq", row.bound_sq},
                             {"bound_lin", row.bound_lin},
                             {"bound_final", row.bound_final},
                             {"vacuous", row.vacuous},
                             {"final_link_vacuous", row.final_link_vacuous},
                             {"holds", row.holds}});
    }
    return {{"n", n},
            {"theta", theta},
            {"weight", weight},
            {"rows", rows_json},
            {"vacuous_rows", vacuous_rows},
            {"p_avg", p_avg},
            {"aggregate_bound", aggregate_bound},
            {"aggregate_holds", aggregate_holds},
            {"pass", pass}};
}

ThetaChainReport theta_chain_check(const SignMatrix& h, const Perturbation& pert) {
    if (!pert.theta_cap()) throw Error("theta_chain_check: perturbation has no theta cap");
    const double theta = *pert.theta_cap();
    if (theta <= 0) throw Error("theta_chain_check: theta must be positive");

    const std::size_t n = h.order();
    const double nd = static_cast<double>(n);
    const RealMatrix ht = pert.apply_real(h); // also enforces the theta cap
    const RealMatrix hr = to_real(h);
    const std::vector<std::size_t> deltas = pert.row_hamming(h);

    ThetaChainReport report;
    report.n = n;
    report.theta = theta;
    report.weight = pert.weight();
    report.pass = true;

    constexpr double kTol = 1e-9;
    double sum_p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ThetaChainRow row;
        row.row = i;
        row.delta = deltas[i];
        const double d = static_cast<double>(row.delta);

        const double row_sq = ht.row(static_cast<Eigen::Index>(i)).squaredNorm();
        if (row_sq == 0.0) {
            // all entries of the row were driven to zero; conveys nothing
            row.p = 0.0;
            row.vacuous = true;
        } else {
            const double c2 = 1.0 / row_sq;
            const double inner =
                hr.row(static_cast<Eigen::Index>(i)).dot(ht.row(static_cast<Eigen::Index>(i)));
            row.p = (inner * inner) * c2 / nd;
            row.bound_sq = c2 * (nd - theta * d) * (nd - theta * d) / nd;
            row.bound_lin = c2 * (nd - 2.0 * theta * d);
            row.bound_final = (nd - 2.0 * theta * d) / (nd + d * (theta * theta + 2.0 * theta));
            if (nd - theta * d < 0.0) {
                row.vacuous = true; // first link not claimed in this regime
            } else {
                if (row.p + kTol < row.bound_sq) row.holds = false;
                if (row.bound_sq + kTol < row.bound_lin) row.holds = false;
                if (nd - 2.0 * theta * d >= 0.0) {
                    if (row.bound_lin + kTol < row.bound_final) row.holds = false;
                } else {
                    row.final_link_vacuous = true;
                    // the end-to-end claim still holds trivially: p >= 0 > bound
                    if (row.p + kTol < row.bound_final) row.holds = false;
                }
            }
        }
        if (row.vacuous) ++report.vacuous_rows;
        if (!row.vacuous && !row.holds) report.pass = false;
        sum_p += row.p;
        report.rows.push_back(row);
    }

    report.p_avg = sum_p / nd;
    const double r_over_n = static_cast<double>(report.weight) / nd;
    report.aggregate_bound =
        (nd - 2.0 * theta * r_over_n) / (nd + r_over_n * (theta * theta + 2.0 * theta));
    report.aggregate_holds = report.p_avg + kTol >= report.aggregate_bound;
    if (!report.aggregate_holds) report.pass = false;
    return report;
}

} // namespace riglab
