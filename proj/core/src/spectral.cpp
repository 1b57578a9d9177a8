#include "riglab/spectral.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "riglab/error.hpp"

namespace riglab {

namespace {

constexpr double kLinkTol = 1e-8;

} // namespace

OrthonormalFactor orthonormal_factor(const RealMatrix& htilde, double rel_tol) {
    if (htilde.norm() == 0.0) throw Error("orthonormal_factor: zero matrix");
    const RealMatrix target = htilde.transpose(); // Htilde^* for real input

    Eigen::JacobiSVD<RealMatrix> svd(target);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * sv(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;

    // Gram-Schmidt with one reorthogonalization pass over the columns.
    const double dep_cutoff = 1e-10 * sv(0);
    RealMatrix basis(target.rows(), static_cast<Eigen::Index>(rank));
    std::size_t got = 0;
    for (Eigen::Index c = 0; c < target.cols() && got < rank; ++c) {
        Eigen::VectorXd v = target.col(c);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < got; ++k)
                v -= basis.col(static_cast<Eigen::Index>(k)).dot(v) *
                     basis.col(static_cast<Eigen::Index>(k));
        const double norm = v.norm();
        if (norm <= dep_cutoff) continue;
        basis.col(static_cast<Eigen::Index>(got)) = v / norm;
        ++got;
    }
    if (got < rank) {
        // degenerate ordering; fall back to the SVD's orthonormal columns
        Eigen::JacobiSVD<RealMatrix> full(target, Eigen::ComputeThinU);
        basis = full.matrixU().leftCols(static_cast<Eigen::Index>(rank));
    }

    OrthonormalFactor out;
    out.rank = rank;
    out.d = std::move(basis);
    out.e = out.d.transpose() * target;
    return out;
}

nlohmann::json SpectralReport::to_json() const {
    nlohmann::json links_json = nlohmann::json::array();
    for (const auto& link : links)
        links_json.push_back(
            {{"name", link.name}, {"lhs", link.lhs}, {"rhs", link.rhs}, {"holds", link.holds}});
    return {{"n", n},
            {"r", r},
            {"lhs_sum_inner", lhs_sum_inner},
            {"rhs_cs", rhs_cs},
            {"sum_squares", sum_squares},
            {"quantum_rhs", quantum_rhs},
            {"links", links_json},
            {"zero_rows", zero_rows},
            {"dominance_witness", dominance_witness},
            {"pass", pass}};
}

SpectralReport spectral_chain_check(const SignMatrix& h, const RealMatrix& htilde) {
    const std::size_t n = h.order();
    if (htilde.rows() != static_cast<Eigen::Index>(n) ||
        htilde.cols() != static_cast<Eigen::Index>(n))
        throw Error("spectral_chain_check: shape mismatch");
    if (htilde.norm() == 0.0) throw Error("spectral_chain_check: zero approximation");

    SpectralReport report;
    report.n = n;

    // Row-normalized copies; zero rows stay zero and are flagged.
    const RealMatrix hn = to_real(h) / std::sqrt(static_cast<double>(n));
    RealMatrix tn = htilde;
    for (Eigen::Index i = 0; i < tn.rows(); ++i) {
        const double norm = tn.row(i).norm();
        if (norm == 0.0)
            report.zero_rows.push_back(static_cast<std::size_t>(i));
        else
            tn.row(i) /= norm;
    }

    const auto factor = orthonormal_factor(tn);
    report.r = factor.rank;
    const double rd = static_cast<double>(report.r);
    const double nd = static_cast<double>(n);

    report.lhs_sum_inner = 0.0;
    report.sum_squares = 0.0;
    for (Eigen::Index i = 0; i < tn.rows(); ++i) {
        const double inner = hn.row(i).dot(tn.row(i));
        report.lhs_sum_inner += inner;
        report.sum_squares += inner * inner;
    }
    report.quantum_rhs = rd;
    report.rhs_cs = std::sqrt(rd * nd);

    auto push_eq = [&](const std::string& name, double lhs, double rhs) {
        report.links.push_back({name, lhs, rhs, std::abs(lhs - rhs) <= kLinkTol});
    };
    auto push_le = [&](const std::string& name, double lhs, double rhs) {
        report.links.push_back({name, lhs, rhs, lhs <= rhs + kLinkTol});
    };

    const double trace_product = (hn * tn.transpose()).trace();
    push_eq("sum_inner_equals_trace", report.lhs_sum_inner, trace_product);

    const RealMatrix hd = hn * factor.d;
    const double hd_norm = hd.norm();
    const double e_norm = factor.e.norm();
    const double trace_de = (hn * factor.d * factor.e).trace();
    push_eq("trace_through_factorization", trace_product, trace_de);
    push_le("cauchy_schwarz_trace", trace_de, hd_norm * e_norm);
    push_eq("row_orthonormal_preserves_norm", hd_norm, factor.d.norm());
    push_eq("basis_norm_is_sqrt_r", factor.d.norm(), std::sqrt(rd));
    push_eq("e_norm_equals_approx_norm", e_norm, tn.norm());
    push_le("approx_norm_at_most_sqrt_n", tn.norm(), std::sqrt(nd));
    push_le("linear_chain_ceiling", report.lhs_sum_inner, report.rhs_cs);
    push_le("sum_of_squares_at_most_r", report.sum_squares, report.quantum_rhs);
    const double cs_from_squares = std::sqrt(nd * report.sum_squares);
    push_le("squares_imply_linear", report.lhs_sum_inner, cs_from_squares);
    push_le("squares_route_dominates", cs_from_squares, report.rhs_cs);

    report.dominance_witness = cs_from_squares < report.rhs_cs - 1e-9;
    report.pass = true;
    for (const auto& link : report.links)
        if (!link.holds) report.pass = false;
    return report;
}

} // namespace riglab
