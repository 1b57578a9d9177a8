#include "riglab/real_matrix.hpp"

#include <Eigen/SVD>

#include "riglab/error.hpp"

namespace riglab {

double frobenius_norm(const RealMatrix& m) {
    return m.norm();
}

double row_inner(const RealMatrix& m, const RealMatrix& n, std::size_t i) {
    if (m.rows() != n.rows() || m.cols() != n.cols())
        throw Error("row_inner: shape mismatch");
    if (static_cast<Eigen::Index>(i) >= m.rows()) throw Error("row_inner: row index out of range");
    return m.row(static_cast<Eigen::Index>(i)).dot(n.row(static_cast<Eigen::Index>(i)));
}

double trace(const RealMatrix& m) {
    if (m.rows() != m.cols()) throw Error("trace: matrix not square");
    return m.trace();
}

double max_abs_entry(const RealMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

std::size_t numerical_rank(const RealMatrix& m, double rel_tol) {
    if (m.size() == 0) return 0;
    if (rel_tol <= 0) throw Error("numerical_rank: tolerance must be positive");
    Eigen::JacobiSVD<RealMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cutoff = rel_tol * sv(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

RealMatrix to_real(const ExactMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m.at(i, j).to_double();
    return out;
}

ExactMatrix to_exact(const RealMatrix& m) {
    if (!all_finite(m)) throw Error("to_exact: non-finite entry");
    ExactMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                    ExactScalar(rational_from_double(m(i, j))));
    return out;
}

bool all_finite(const RealMatrix& m) {
    return m.allFinite();
}

} // namespace riglab
