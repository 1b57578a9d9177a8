#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <vector>

#include "riglab/perturbation.hpp"
#include "riglab/rational.hpp"
#include "riglab/sign_matrix.hpp"

namespace riglab {

struct ZeroOutsideResult {
    ExactMatrix matrix;  // agrees with H on row_set x col_set, 0 elsewhere
    Perturbation pert;   // weight n^2 - a*b
};

/// Keeps an a x b selection of H and zeroes everything else. The rank of
/// the result equals the rank of the kept submatrix.
ZeroOutsideResult zero_outside(const SignMatrix& h, const std::vector<std::size_t>& row_set,
                               const std::vector<std::size_t>& col_set);

struct DiagonalShiftResult {
    ExactMatrix matrix; // H -+ sqrt(n) I over Q(sqrt(n))
    Perturbation pert;  // n diagonal changes
    ExactScalar shift;  // the signed sqrt(n) that was subtracted/added
};

/// H - sqrt(n) I (or + with sign = +1) for symmetric Hadamard H. The
/// eigenvalues of such H are +-sqrt(n), so the shift kills half the
/// spectrum: the result has exact rank n/2 at weight n.
DiagonalShiftResult diagonal_shift(const SignMatrix& h, int sign = -1);

struct BlockDecomposition {
    std::size_t order = 0;        // n = 2^k
    std::size_t block_size = 0;   // 2^j
    std::size_t grid_size = 0;    // 2^(k-j)
    std::vector<std::int8_t> sign_grid; // row-major grid of block signs (0 = mismatch)
    bool blocks_match = false;    // every block equals sign * H_{2^j}
    bool grid_matches = false;    // sign grid equals H_{2^(k-j)}
    bool ok = false;              // both of the above
    std::size_t mismatched_blocks = 0;
    nlohmann::json to_json() const;
};

/// Partitions H into contiguous 2^j x 2^j blocks and verifies the tensor
/// structure: each block is +-H_{2^j} and the sign grid is H_{2^(k-j)}.
/// Imported matrices that are not Sylvester simply verify false.
BlockDecomposition block_decompose(const SignMatrix& h, std::size_t j);

struct BlockCountReport {
    std::size_t k = 0;
    std::size_t r = 0;
    Rational value{0};          // (n/2r)^2 * r
    Rational rigidity_bound{0}; // n^2/4r
    bool matches = false;       // the two agree identically
    std::size_t per_block_floor = 0; // full-rank 2r x 2r block needs >= r changes
    nlohmann::json to_json() const;
};

/// Midrijanis's block-counting lower bound for H_{2^k} and power-of-two
/// rank targets: (n/2r)^2 disjoint +-H_{2r} copies, each needing at least
/// r changes. Cross-checked against n^2/4r.
BlockCountReport midrijanis_lower_report(std::size_t k, std::size_t r);

} // namespace riglab
