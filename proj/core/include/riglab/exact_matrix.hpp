#pragma once

#include <cstddef>
#include <vector>

#include "riglab/exact_scalar.hpp"

namespace riglab {

/// Dense row-major matrix over Q(sqrt(d)). Non-empty by construction.
/// All entries live in one extension: plain rationals mix freely, but two
/// different nonzero d's are rejected.
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> entries);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Shared extension parameter d (0 when every entry is rational).
    unsigned long extension() const { return d_; }

    const ExactScalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, ExactScalar v);

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExactScalar> entries_;
    unsigned long d_ = 0;

    void check_index(std::size_t i, std::size_t j) const;
    void absorb_extension(const ExactScalar& v);
    std::size_t idx(std::size_t i, std::size_t j) const { return i * cols_ + j; }
};

/// Exact rank by Gaussian elimination over Q(sqrt(d)).
/// Pivot selection is first-nonzero in column order; deterministic.
std::size_t rank_exact(const ExactMatrix& m);

/// Number of positions where the two matrices differ (exact comparison).
std::size_t weight_diff(const ExactMatrix& a, const ExactMatrix& b);

/// Row/column selection in the given order. Index sets must be non-empty,
/// in range, and duplicate-free.
ExactMatrix submatrix(const ExactMatrix& m, const std::vector<std::size_t>& row_set,
                      const std::vector<std::size_t>& col_set);

} // namespace riglab
