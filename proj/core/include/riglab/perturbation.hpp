#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "riglab/exact_matrix.hpp"
#include "riglab/real_matrix.hpp"
#include "riglab/sign_matrix.hpp"

namespace riglab {

struct Change {
    std::size_t row = 0;
    std::size_t col = 0;
    ExactScalar value; // replacement entry
};

/// Sparse set of entry replacements turning a base matrix M into M-tilde.
/// Changes are kept sorted by (row, col) and duplicate-free. When a theta
/// cap is present, |new - old| <= theta is checked exactly against the base
/// matrix at application time.
class Perturbation {
  public:
    Perturbation(std::size_t base_n, std::vector<Change> changes,
                 std::optional<double> theta_cap = std::nullopt);

    std::size_t base_order() const { return base_n_; }
    std::size_t weight() const { return changes_.size(); }
    const std::vector<Change>& changes() const { return changes_; }
    std::optional<double> theta_cap() const { return theta_cap_; }

    ExactMatrix apply(const SignMatrix& base) const;
    RealMatrix apply_real(const SignMatrix& base) const;

    /// Hamming distance per row between base and the perturbed matrix
    /// (changes that re-write the old value do not count).
    std::vector<std::size_t> row_hamming(const SignMatrix& base) const;

    nlohmann::json to_json(const SignMatrix& base) const;

  private:
    std::size_t base_n_ = 0;
    std::vector<Change> changes_;
    std::optional<double> theta_cap_;

    void check_theta(const SignMatrix& base) const;
};

} // namespace riglab
