#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "riglab/perturbation.hpp"
#include "riglab/real_matrix.hpp"
#include "riglab/sign_matrix.hpp"

namespace riglab {

/// H with every row projected onto a random r-dimensional subspace:
/// H * P for a projector P of rank r. The result has rank r almost surely.
RealMatrix random_rowspace_projection(const SignMatrix& h, std::size_t r, std::mt19937_64& rng);

/// Uniform nonempty subset of {0, ..., n-1}.
std::vector<std::size_t> random_nonempty_subset(std::size_t n, std::mt19937_64& rng);

/// count distinct positions changed by uniform offsets in [-theta, theta].
Perturbation random_theta_perturbation(const SignMatrix& h, double theta, std::size_t count,
                                       std::mt19937_64& rng);

} // namespace riglab
