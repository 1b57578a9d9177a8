#include "riglab/sign_matrix.hpp"

#include <cmath>
#include <string>

#include "riglab/error.hpp"

namespace riglab {

SignMatrix::SignMatrix(std::size_t n) : n_(n), signs_(n * n, 1) {
    if (n == 0) throw Error("SignMatrix: empty order");
}

SignMatrix::SignMatrix(std::size_t n, std::vector<std::int8_t> signs)
    : n_(n), signs_(std::move(signs)) {
    if (n == 0) throw Error("SignMatrix: empty order");
    if (signs_.size() != n * n) throw Error("SignMatrix: entry count does not match order");
    for (auto s : signs_)
        if (s != 1 && s != -1) throw Error("SignMatrix: entry not in {+1, -1}");
}

SignMatrix SignMatrix::sylvester(std::size_t k, std::size_t order_cap) {
    if (k >= 63) throw Error("sylvester: order 2^k overflows");
    const std::size_t n = std::size_t{1} << k;
    if (n > order_cap)
        throw Error("sylvester: order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(order_cap));
    SignMatrix h(1);
    for (std::size_t step = 0; step < k; ++step) {
        const std::size_t m = h.n_;
        SignMatrix next(2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const std::int8_t s = h.signs_[i * m + j];
                next.signs_[i * 2 * m + j] = s;
                next.signs_[i * 2 * m + (m + j)] = s;
                next.signs_[(m + i) * 2 * m + j] = s;
                next.signs_[(m + i) * 2 * m + (m + j)] = static_cast<std::int8_t>(-s);
            }
        }
        h = std::move(next);
    }
    h.verified_hadamard_ = is_hadamard(h);
    return h;
}

void SignMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_)
        throw Error("SignMatrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range for order " + std::to_string(n_));
}

int SignMatrix::at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return signs_[i * n_ + j];
}

void SignMatrix::set(std::size_t i, std::size_t j, int sign) {
    check_index(i, j);
    if (sign != 1 && sign != -1) throw Error("SignMatrix: entry not in {+1, -1}");
    signs_[i * n_ + j] = static_cast<std::int8_t>(sign);
    verified_hadamard_ = false;
}

void SignMatrix::flip(std::size_t i, std::size_t j) {
    check_index(i, j);
    signs_[i * n_ + j] = static_cast<std::int8_t>(-signs_[i * n_ + j]);
    verified_hadamard_ = false;
}

bool SignMatrix::verify_hadamard() {
    verified_hadamard_ = is_hadamard(*this);
    return verified_hadamard_;
}

bool is_hadamard(const SignMatrix& m) {
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i; k < n; ++k) {
            long dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += m.at(i, j) * m.at(k, j);
            const long expected = (i == k) ? static_cast<long>(n) : 0;
            if (dot != expected) return false;
        }
    }
    return true;
}

bool is_symmetric(const SignMatrix& m) {
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

long trace_of(const SignMatrix& m) {
    long t = 0;
    for (std::size_t i = 0; i < m.order(); ++i) t += m.at(i, i);
    return t;
}

namespace {

template <typename Matrix>
bool generalized_hadamard_impl(const Matrix& m, double mag_rtol, double orth_tol) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    const Eigen::Index n = m.rows();

    double lo = std::abs(m(0, 0));
    double hi = lo;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double mag = std::abs(m(i, j));
            lo = std::min(lo, mag);
            hi = std::max(hi, mag);
        }
    }
    if (hi == 0.0) return false;
    if ((hi - lo) > mag_rtol * hi) return false;

    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = i + 1; k < n; ++k) {
            const double inner = std::abs(m.row(i).dot(m.row(k)));
            const double scale = m.row(i).norm() * m.row(k).norm();
            if (inner > orth_tol * scale) return false;
        }
    }
    return true;
}

} // namespace

bool is_generalized_hadamard(const RealMatrix& m, double mag_rtol, double orth_tol) {
    return generalized_hadamard_impl(m, mag_rtol, orth_tol);
}

bool is_generalized_hadamard(const ComplexMatrix& m, double mag_rtol, double orth_tol) {
    return generalized_hadamard_impl(m, mag_rtol, orth_tol);
}

RealMatrix to_real(const SignMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.order());
    RealMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(i, j) = static_cast<double>(
                m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    return out;
}

ExactMatrix to_exact(const SignMatrix& m) {
    ExactMatrix out(m.order(), m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            out.set(i, j, ExactScalar(m.at(i, j)));
    return out;
}

} // namespace riglab
