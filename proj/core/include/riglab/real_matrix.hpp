#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "riglab/exact_matrix.hpp"

namespace riglab {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

double frobenius_norm(const RealMatrix& m);

/// <M_i, N_i> for row i, no normalization. Shapes must match.
double row_inner(const RealMatrix& m, const RealMatrix& n, std::size_t i);

/// Sum of diagonal entries; square matrices only.
double trace(const RealMatrix& m);

double max_abs_entry(const RealMatrix& m);

/// Singular values above rel_tol * sigma_max count toward the rank.
std::size_t numerical_rank(const RealMatrix& m, double rel_tol = 1e-8);

RealMatrix to_real(const ExactMatrix& m);

/// Exact lift of a double matrix: every entry becomes its binary rational.
ExactMatrix to_exact(const RealMatrix& m);

bool all_finite(const RealMatrix& m);

} // namespace riglab
