#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "riglab/exact_matrix.hpp"
#include "riglab/real_matrix.hpp"

namespace riglab {

/// Square matrix with entries in {+1, -1}. The verified_hadamard flag
/// means H * H^T = n * I has been checked exactly; any mutation clears it.
class SignMatrix {
  public:
    static constexpr std::size_t kDefaultOrderCap = 1024;

    explicit SignMatrix(std::size_t n); // all +1
    SignMatrix(std::size_t n, std::vector<std::int8_t> signs);

    /// H_{2^k}, the k-fold tensor power of [[1,1],[1,-1]]. H_{2^0} = [[1]].
    static SignMatrix sylvester(std::size_t k, std::size_t order_cap = kDefaultOrderCap);

    std::size_t order() const { return n_; }
    int at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, int sign);
    void flip(std::size_t i, std::size_t j);

    bool verified_hadamard() const { return verified_hadamard_; }
    /// Runs the exact orthogonality check and caches the outcome.
    bool verify_hadamard();

    bool operator==(const SignMatrix& rhs) const {
        return n_ == rhs.n_ && signs_ == rhs.signs_;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::int8_t> signs_;
    bool verified_hadamard_ = false;

    void check_index(std::size_t i, std::size_t j) const;
};

/// H * H^T = n * I, exact integer arithmetic.
bool is_hadamard(const SignMatrix& m);

bool is_symmetric(const SignMatrix& m);

long trace_of(const SignMatrix& m);

/// Orthogonal rows and all entry magnitudes equal: magnitudes within
/// mag_rtol relative spread, row inner products within orth_tol of zero
/// relative to the row norms.
bool is_generalized_hadamard(const RealMatrix& m, double mag_rtol = 1e-10,
                             double orth_tol = 1e-9);
bool is_generalized_hadamard(const ComplexMatrix& m, double mag_rtol = 1e-10,
                             double orth_tol = 1e-9);

RealMatrix to_real(const SignMatrix& m);
ExactMatrix to_exact(const SignMatrix& m);

} // namespace riglab
