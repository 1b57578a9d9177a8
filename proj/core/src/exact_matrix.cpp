#include "riglab/exact_matrix.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "riglab/error.hpp"

namespace riglab {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw Error("ExactMatrix: empty shape");
    entries_.assign(rows * cols, ExactScalar(0));
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error("ExactMatrix: empty shape");
    if (entries_.size() != rows * cols)
        throw Error("ExactMatrix: entry count does not match shape");
    for (const auto& v : entries_) absorb_extension(v);
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[m.idx(i, i)] = ExactScalar(1);
    return m;
}

void ExactMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw Error("ExactMatrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

void ExactMatrix::absorb_extension(const ExactScalar& v) {
    if (v.extension() == 0) return;
    if (d_ == 0) {
        d_ = v.extension();
    } else if (d_ != v.extension()) {
        throw Error("ExactMatrix: entries mix extensions sqrt(" + std::to_string(d_) +
                    ") and sqrt(" + std::to_string(v.extension()) + ")");
    }
}

const ExactScalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return entries_[idx(i, j)];
}

void ExactMatrix::set(std::size_t i, std::size_t j, ExactScalar v) {
    check_index(i, j);
    absorb_extension(v);
    entries_[idx(i, j)] = std::move(v);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    t.d_ = d_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.entries_[t.idx(j, i)] = entries_[idx(i, j)];
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("ExactMatrix: shape mismatch in product");
    ExactMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const ExactScalar& lik = entries_[idx(i, k)];
            if (lik.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const ExactScalar& rkj = rhs.entries_[rhs.idx(k, j)];
                if (rkj.is_zero()) continue;
                out.entries_[out.idx(i, j)] += lik * rkj;
            }
        }
    }
    for (const auto& v : out.entries_) out.absorb_extension(v);
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("ExactMatrix: shape mismatch in sum");
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    for (const auto& v : out.entries_) out.absorb_extension(v);
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("ExactMatrix: shape mismatch in difference");
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    for (const auto& v : out.entries_) out.absorb_extension(v);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const ExactScalar& v) { return v.is_zero(); });
}

std::size_t rank_exact(const ExactMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<ExactScalar> work;
    work.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) work.push_back(m.at(i, j));
    auto cell = [&](std::size_t i, std::size_t j) -> ExactScalar& { return work[i * cols + j]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && cell(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(cell(pivot, j), cell(rank, j));
        const ExactScalar inv = cell(rank, col).inverse();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (cell(r, col).is_zero()) continue;
            const ExactScalar factor = cell(r, col) * inv;
            cell(r, col) = ExactScalar(0);
            for (std::size_t j = col + 1; j < cols; ++j)
                cell(r, j) -= factor * cell(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::size_t weight_diff(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("weight_diff: shape mismatch");
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) ++w;
    return w;
}

namespace {

void check_index_set(const std::vector<std::size_t>& set, std::size_t limit, const char* what) {
    if (set.empty()) throw Error(std::string("submatrix: empty ") + what + " set");
    std::unordered_set<std::size_t> seen;
    for (auto v : set) {
        if (v >= limit)
            throw Error(std::string("submatrix: ") + what + " index " + std::to_string(v) +
                        " out of range");
        if (!seen.insert(v).second)
            throw Error(std::string("submatrix: duplicate ") + what + " index " +
                        std::to_string(v));
    }
}

} // namespace

ExactMatrix submatrix(const ExactMatrix& m, const std::vector<std::size_t>& row_set,
                      const std::vector<std::size_t>& col_set) {
    check_index_set(row_set, m.rows(), "row");
    check_index_set(col_set, m.cols(), "column");
    ExactMatrix out(row_set.size(), col_set.size());
    for (std::size_t i = 0; i < row_set.size(); ++i)
        for (std::size_t j = 0; j < col_set.size(); ++j)
            out.set(i, j, m.at(row_set[i], col_set[j]));
    return out;
}

} // namespace riglab
