#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

namespace riglab {

struct ReproduceOptions {
    std::uint64_t seed = 1;
    std::size_t h8_scan_samples = 10000;
    std::size_t nayak_projection_instances = 150; // per (order, rank) pair
    std::size_t nayak_zero_outside_instances = 100;
    std::size_t nayak_perturbation_instances = 100;
    std::size_t regev_instances = 200;
    std::size_t theta_chain_instances = 170; // per (theta, order) pair
    std::size_t spectral_instances = 120;
    std::size_t max_shift_k = 4;
    std::size_t max_block_k = 4;
};

struct ReproduceResult {
    nlohmann::json bundle;
    std::size_t total_checks = 0;
    std::size_t total_violations = 0;
    bool pass = false;
};

/// Runs the full desk-scale verification suite and returns one JSON bundle.
/// Every check is a proven statement, so any violation indicates an
/// implementation bug; pass means zero violations.
ReproduceResult run_reproduce(const ReproduceOptions& options = {});

/// Human-readable summary derived from the JSON bundle (one line per
/// section plus a verdict).
std::string render_summary(const nlohmann::json& bundle);

} // namespace riglab
