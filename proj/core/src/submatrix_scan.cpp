#include "riglab/submatrix_scan.hpp"

#include <random>

#include "riglab/bounds.hpp"
#include "riglab/error.hpp"
#include "riglab/exact_matrix.hpp"
#include "riglab/parallel.hpp"

namespace riglab {

nlohmann::json SubmatrixScanReport::to_json() const {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& viol : violations)
        v.push_back({{"rows", viol.rows}, {"cols", viol.cols}, {"rank", viol.rank},
                     {"bound", viol.bound}});
    return {{"n", n},
            {"mode", mode == ScanMode::Exhaustive ? "exhaustive" : "sampled"},
            {"total_checked", total_checked},
            {"violations", v},
            {"min_slack", min_slack},
            {"seed", seed},
            {"samples", samples}};
}

namespace {

std::vector<std::size_t> mask_to_set(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) set.push_back(i);
    return set;
}

struct Sample {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

struct Outcome {
    long slack = 0;
    bool violated = false;
    std::size_t rank = 0;
    std::size_t bound = 0;
};

} // namespace

SubmatrixScanReport scan_all_submatrices(const SignMatrix& h, ScanMode mode,
                                         std::size_t sample_count, std::uint64_t seed,
                                         std::size_t max_pairs) {
    if (!is_hadamard(h)) throw Error("scan_all_submatrices: input is not Hadamard");
    const std::size_t n = h.order();

    SubmatrixScanReport report;
    report.n = n;
    report.mode = mode;
    report.seed = seed;
    report.samples = (mode == ScanMode::Sampled) ? sample_count : 0;

    std::vector<Sample> pairs;
    if (mode == ScanMode::Exhaustive) {
        if (n > 16) throw Error("scan_all_submatrices: exhaustive mode capped at order 16");
        const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
        if (subsets * subsets > max_pairs)
            throw Error("scan_all_submatrices: " + std::to_string(subsets * subsets) +
                        " pairs exceed the cap of " + std::to_string(max_pairs) +
                        " (raise the cap to allow this order)");
        pairs.reserve(subsets * subsets);
        for (std::uint64_t rm = 1; rm <= subsets; ++rm)
            for (std::uint64_t cm = 1; cm <= subsets; ++cm)
                pairs.push_back({mask_to_set(rm, n), mask_to_set(cm, n)});
    } else {
        if (sample_count == 0) throw Error("scan_all_submatrices: sample count must be positive");
        std::mt19937_64 rng(seed);
        auto draw_nonempty = [&]() {
            std::vector<std::size_t> set;
            do {
                set.clear();
                for (std::size_t i = 0; i < n; ++i)
                    if (rng() & 1) set.push_back(i);
            } while (set.empty());
            return set;
        };
        pairs.reserve(sample_count);
        for (std::size_t s = 0; s < sample_count; ++s) {
            auto rows = draw_nonempty();
            auto cols = draw_nonempty();
            pairs.push_back({std::move(rows), std::move(cols)});
        }
    }

    const ExactMatrix exact = to_exact(h);
    std::vector<Outcome> outcomes(pairs.size());
    parallel_for(0, pairs.size(), [&](std::size_t i) {
        const auto& pair = pairs[i];
        const std::size_t rank = rank_exact(submatrix(exact, pair.rows, pair.cols));
        const std::size_t bound = submatrix_rank_bound(pair.rows.size(), pair.cols.size(), n);
        outcomes[i] = {static_cast<long>(rank) - static_cast<long>(bound), rank < bound, rank,
                       bound};
    });

    report.total_checked = pairs.size();
    report.min_slack = outcomes.empty() ? 0 : outcomes.front().slack;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        report.min_slack = std::min(report.min_slack, outcomes[i].slack);
        if (outcomes[i].violated)
            report.violations.push_back(
                {pairs[i].rows, pairs[i].cols, outcomes[i].rank, outcomes[i].bound});
    }
    return report;
}

} // namespace riglab
