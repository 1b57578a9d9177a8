#pragma once

#include <cstddef>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <vector>

#include "riglab/sign_matrix.hpp"

namespace riglab {

enum class ScanMode { Exhaustive, Sampled };

struct ScanViolation {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::size_t rank = 0;
    std::size_t bound = 0;
};

struct SubmatrixScanReport {
    std::size_t n = 0;
    ScanMode mode = ScanMode::Exhaustive;
    std::size_t total_checked = 0;
    std::vector<ScanViolation> violations; // empty for genuine Hadamard inputs
    long min_slack = 0;                    // min over checked of rank - ceil(ab/n)
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    nlohmann::json to_json() const;
};

/// Checks rank(submatrix) >= ceil(a*b/n) over submatrices of a Hadamard
/// matrix. Exhaustive mode enumerates all (2^n - 1)^2 nonempty
/// (rowset, colset) pairs and requires that count to fit under max_pairs;
/// sampled mode draws pairs uniformly (both sets uniform over nonempty
/// subsets) with a fixed seed. Deterministic per seed.
SubmatrixScanReport scan_all_submatrices(const SignMatrix& h, ScanMode mode,
                                         std::size_t sample_count = 0, std::uint64_t seed = 1,
                                         std::size_t max_pairs = 225);

} // namespace riglab
