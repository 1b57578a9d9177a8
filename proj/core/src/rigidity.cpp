#include "riglab/rigidity.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "riglab/bounds.hpp"
#include "riglab/constructions.hpp"
#include "riglab/error.hpp"
#include "riglab/exact_matrix.hpp"
#include "riglab/parallel.hpp"

namespace riglab {

namespace {

// --- rank-1 oracle ---------------------------------------------------------

struct UCandidate {
    std::size_t mismatches = SIZE_MAX;
    std::uint32_t u = 0;
    bool operator<(const UCandidate& rhs) const {
        return std::tie(mismatches, u) < std::tie(rhs.mismatches, rhs.u);
    }
};

std::uint32_t full_mask(std::size_t n) {
    return (n >= 32) ? ~0u : ((1u << n) - 1u);
}

std::size_t column_mismatch(std::uint32_t u, std::uint32_t col_mask, std::size_t n) {
    const std::size_t disagree_plus =
        static_cast<std::size_t>(std::popcount((u ^ col_mask) & full_mask(n)));
    return std::min(disagree_plus, n - disagree_plus);
}

} // namespace

Rank1Result rank1_rigidity_exact(const SignMatrix& m, std::size_t max_order) {
    const std::size_t n = m.order();
    const std::size_t cap = std::min<std::size_t>(max_order, 32);
    if (n > cap)
        throw Error("rank1_rigidity_exact: order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));

    // Column bitmasks: bit i set iff M_ij = +1.
    std::vector<std::uint32_t> col_mask(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (m.at(i, j) > 0) col_mask[j] |= (1u << i);

    const std::size_t u_count = std::size_t{1} << (n - 1); // u_0 = +1 by symmetry
    const UCandidate best = parallel_map_reduce(
        std::size_t{0}, u_count, UCandidate{},
        [&](std::size_t w) {
            const std::uint32_t u = (static_cast<std::uint32_t>(w) << 1) | 1u;
            std::size_t total = 0;
            for (std::size_t j = 0; j < n; ++j) total += column_mismatch(u, col_mask[j], n);
            return UCandidate{total, u};
        },
        [](UCandidate acc, UCandidate item) { return std::min(acc, item); });

    // Rebuild v and the witness for the winning u. Per-column ties pick +1.
    std::vector<int> u_signs(n);
    for (std::size_t i = 0; i < n; ++i) u_signs[i] = (best.u & (1u << i)) ? 1 : -1;
    std::vector<Change> changes;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t disagree_plus =
            static_cast<std::size_t>(std::popcount((best.u ^ col_mask[j]) & full_mask(n)));
        const int v = (disagree_plus <= n - disagree_plus) ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) {
            const int want = u_signs[i] * v;
            if (m.at(i, j) != want) changes.push_back({i, j, ExactScalar(want)});
        }
    }
    Rank1Result out{best.mismatches, Perturbation(n, std::move(changes))};
    if (out.witness.weight() != out.value)
        throw Error("rank1_rigidity_exact: internal witness/count mismatch");
    return out;
}

namespace {

// Union-find with parity: parity_[x] is the sign relation between x and
// its parent (0 = same, 1 = opposite).
class ParityUnionFind {
  public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::pair<std::size_t, int> find(std::size_t x) {
        if (parent_[x] == x) return {x, 0};
        const auto [root, par] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= par;
        return {root, parity_[x]};
    }

    /// Links x and y at the given relative parity; false on contradiction.
    bool unite(std::size_t x, std::size_t y, int parity) {
        const auto [rx, px] = find(x);
        const auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == parity;
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ parity;
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

} // namespace

bool rank1_completion_feasible(
    const SignMatrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& changed) {
    const std::size_t n = m.order();
    std::vector<bool> is_changed(n * n, false);
    for (const auto& [i, j] : changed) {
        if (i >= n || j >= n) throw Error("rank1_completion_feasible: position out of range");
        is_changed[i * n + j] = true;
    }
    // Balance of the signed bipartite graph on rows and columns whose edges
    // are the unchanged positions: -1 entries demand opposite end signs.
    ParityUnionFind uf(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (is_changed[i * n + j]) continue;
            const int parity = (m.at(i, j) < 0) ? 1 : 0;
            if (!uf.unite(i, n + j, parity)) return false;
        }
    return true;
}

// --- heuristic rank-r upper bound search -----------------------------------

namespace {

using Pattern = std::vector<std::pair<std::size_t, std::size_t>>;

struct WitnessCandidate {
    std::size_t weight = SIZE_MAX;
    Pattern pattern; // sorted change positions
    std::vector<Change> changes;
    bool valid() const { return weight != SIZE_MAX; }
    bool beats(const WitnessCandidate& rhs) const {
        return std::tie(weight, pattern) < std::tie(rhs.weight, rhs.pattern);
    }
};

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

RealMatrix truncated_rank(const RealMatrix& x, std::size_t r) {
    Eigen::JacobiSVD<RealMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::Index rr =
        std::min<Eigen::Index>(static_cast<Eigen::Index>(r), svd.singularValues().size());
    return svd.matrixU().leftCols(rr) * svd.singularValues().head(rr).asDiagonal() *
           svd.matrixV().leftCols(rr).transpose();
}

struct FitResult {
    bool accepted = false;
    double residual = 0.0;
    RealMatrix low_rank;
};

/// Alternating minimization for min ||(L - M) off S||_F over rank-r L:
/// alternate a rank-r truncation with re-imposing M off S (and, when a
/// theta box is given, clamping the free entries into it). Stagnation cuts
/// a restart short; acceptance needs the off-S residual plus any clamp
/// excess to fall below tol together.
FitResult masked_low_rank_fit(const RealMatrix& m, const std::vector<bool>& in_pattern,
                              std::size_t r, std::optional<double> theta, std::uint64_t seed,
                              const SearchOptions& opts) {
    const Eigen::Index n = m.rows();
    auto box_clamp = [&](double v, double center) {
        if (!theta) return v;
        return std::clamp(v, center - *theta, center + *theta);
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    RealMatrix x = m;
    // init spread stays inside the box and matches the unclamped search
    // whenever theta does not bind
    const double spread = theta ? std::min(*theta, 1.0) : 1.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (in_pattern[static_cast<std::size_t>(i * n + j)])
                x(i, j) = box_clamp(m(i, j) + spread * unit(rng), m(i, j));

    FitResult out;
    double last = std::numeric_limits<double>::infinity();
    std::size_t stale = 0;
    for (std::size_t it = 0; it < opts.iterations; ++it) {
        const RealMatrix low = truncated_rank(x, r);
        double off_sq = 0.0;
        double clamp_sq = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                const double v = low(i, j);
                if (in_pattern[static_cast<std::size_t>(i * n + j)]) {
                    const double c = box_clamp(v, m(i, j));
                    clamp_sq += (c - v) * (c - v);
                    x(i, j) = c;
                } else {
                    off_sq += (v - m(i, j)) * (v - m(i, j));
                    x(i, j) = m(i, j);
                }
            }
        }
        const double residual = std::sqrt(off_sq + clamp_sq);
        if (residual < opts.residual_tol) {
            out.accepted = true;
            out.residual = residual;
            out.low_rank = low;
            return out;
        }
        if (residual > last - 1e-13)
            ++stale;
        else
            stale = 0;
        last = residual;
        if (stale >= 25) break; // stuck in a local minimum
    }
    out.residual = last;
    return out;
}

/// Explicit witness from an accepted fit: off-pattern entries are patched
/// to M exactly, in-pattern entries take the (clamped) fitted values, so
/// the change weight is at most |S| and the numerical rank stays r up to
/// the patch size.
std::optional<WitnessCandidate> witness_from_fit(const SignMatrix& m, const Pattern& pattern,
                                                 const RealMatrix& low, std::size_t r,
                                                 std::optional<double> theta,
                                                 const SearchOptions& opts) {
    RealMatrix patched = to_real(m);
    std::vector<Change> changes;
    Pattern positions;
    for (const auto& [i, j] : pattern) {
        double v = low(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        const double center = static_cast<double>(m.at(i, j));
        if (theta) v = std::clamp(v, center - *theta, center + *theta);
        if (v == center) continue; // fit landed on the original entry
        patched(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        changes.push_back({i, j, ExactScalar(rational_from_double(v))});
        positions.emplace_back(i, j);
    }
    if (numerical_rank(patched, opts.rank_rel_tol) > r) return std::nullopt;
    WitnessCandidate cand;
    cand.weight = changes.size();
    cand.pattern = std::move(positions);
    cand.changes = std::move(changes);
    return cand;
}

/// Verifies an explicitly constructed witness (weight, theta cap, rank).
std::optional<WitnessCandidate> witness_from_changes(const SignMatrix& m,
                                                     std::vector<Change> changes, std::size_t r,
                                                     std::optional<double> theta,
                                                     const SearchOptions& opts) {
    const std::size_t n = m.order();
    // drop no-op changes so weight equals the true Hamming weight
    std::vector<Change> real_changes;
    Pattern positions;
    for (auto& c : changes) {
        if (c.value == ExactScalar(m.at(c.row, c.col))) continue;
        positions.emplace_back(c.row, c.col);
        real_changes.push_back(std::move(c));
    }
    try {
        Perturbation pert(n, real_changes, theta); // exact theta check on apply
        const RealMatrix ht = pert.apply_real(m);
        if (numerical_rank(ht, opts.rank_rel_tol) > r) return std::nullopt;
    } catch (const Error&) {
        return std::nullopt; // theta cap violated or similar: candidate unusable
    }
    std::sort(positions.begin(), positions.end());
    WitnessCandidate cand;
    cand.weight = real_changes.size();
    cand.pattern = std::move(positions);
    cand.changes = std::move(real_changes);
    return cand;
}

/// Positions ordered by decreasing rank-r residual |M - trunc_r(M)|,
/// index order on ties. The head of this list is where a rank-r fit
/// struggles most, hence the greedy proposals.
Pattern leverage_order(const SignMatrix& m, std::size_t r) {
    const RealMatrix real = to_real(m);
    const RealMatrix low = truncated_rank(real, r);
    const std::size_t n = m.order();
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scored.emplace_back(
                -std::abs(real(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                          low(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))),
                i * n + j);
    std::sort(scored.begin(), scored.end());
    Pattern out;
    out.reserve(scored.size());
    for (const auto& [neg, idx] : scored) out.emplace_back(idx / n, idx % n);
    return out;
}

struct SearchProblem {
    const SignMatrix& m;
    std::size_t r;
    std::optional<double> theta;
    std::size_t budget;
    std::uint64_t seed;
    SearchOptions opts;
};

void try_candidate(std::optional<WitnessCandidate> cand, WitnessCandidate& best) {
    if (!cand) return;
    if (!best.valid() || cand->beats(best)) best = std::move(*cand);
}

WitnessCandidate run_search(const SearchProblem& p) {
    const std::size_t n = p.m.order();
    const std::size_t exact_rank = rank_exact(to_exact(p.m));
    WitnessCandidate best;

    // Deterministic baseline witnesses first.
    if (exact_rank <= p.r)
        try_candidate(witness_from_changes(p.m, {}, p.r, p.theta, p.opts), best);

    if (p.opts.seed_constructions && !best.valid()) {
        // keep the first r rows, zero the rest
        std::vector<Change> zero_rows;
        for (std::size_t i = p.r; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) zero_rows.push_back({i, j, ExactScalar(0)});
        try_candidate(witness_from_changes(p.m, std::move(zero_rows), p.r, p.theta, p.opts),
                      best);
    }
    if (p.opts.seed_constructions && 2 * p.r == n && is_symmetric(p.m) && is_hadamard(p.m)) {
        auto shifted = diagonal_shift(p.m);
        std::vector<Change> changes(shifted.pert.changes());
        try_candidate(witness_from_changes(p.m, std::move(changes), p.r, p.theta, p.opts), best);
    }
    if (p.opts.seed_rank1_oracle && n <= 20) {
        auto oracle = rank1_rigidity_exact(p.m);
        std::vector<Change> changes(oracle.witness.changes());
        try_candidate(witness_from_changes(p.m, std::move(changes), p.r, p.theta, p.opts), best);
    }

    // Randomized + residual-guided pattern proposals.
    const Pattern by_leverage = leverage_order(p.m, p.r);
    const RealMatrix real = to_real(p.m);
    std::mt19937_64 rng(mix_seed(p.seed, 0x7061747465726eull, n));
    std::set<Pattern> tried;
    for (std::size_t b = 0; b < p.budget; ++b) {
        if (best.valid() && best.weight <= 1) break; // cannot improve below weight 1... weight 0 handled above
        const std::size_t hi = best.valid() ? best.weight - 1 : n * n;
        if (hi == 0) break;
        std::uniform_int_distribution<std::size_t> size_dist(1, hi);
        const std::size_t w = size_dist(rng);

        Pattern pattern;
        if (b % 2 == 0) {
            // residual-guided head with random substitutions
            pattern.assign(by_leverage.begin(),
                           by_leverage.begin() + static_cast<std::ptrdiff_t>(
                                                     std::min(w, by_leverage.size())));
            std::uniform_int_distribution<std::size_t> pos_dist(0, n * n - 1);
            for (auto& pos : pattern)
                if ((rng() & 3u) == 0) { // swap out a quarter of the head
                    const std::size_t idx = pos_dist(rng);
                    pos = {idx / n, idx % n};
                }
        } else {
            std::vector<std::size_t> all(n * n);
            std::iota(all.begin(), all.end(), std::size_t{0});
            std::shuffle(all.begin(), all.end(), rng);
            for (std::size_t t = 0; t < w; ++t) pattern.emplace_back(all[t] / n, all[t] % n);
        }
        std::sort(pattern.begin(), pattern.end());
        pattern.erase(std::unique(pattern.begin(), pattern.end()), pattern.end());
        if (pattern.empty() || !tried.insert(pattern).second) continue;

        std::vector<bool> in_pattern(n * n, false);
        for (const auto& [i, j] : pattern) in_pattern[i * n + j] = true;

        // Restarts are data-parallel; the first accepted restart (lowest
        // index) wins, which keeps the outcome independent of scheduling.
        struct RestartOutcome {
            std::size_t index = SIZE_MAX;
            FitResult fit;
        };
        const RestartOutcome outcome = parallel_map_reduce(
            std::size_t{0}, p.opts.restarts, RestartOutcome{},
            [&](std::size_t restart) {
                FitResult fit = masked_low_rank_fit(real, in_pattern, p.r, p.theta,
                                                    mix_seed(p.seed, b, restart), p.opts);
                return RestartOutcome{fit.accepted ? restart : SIZE_MAX, std::move(fit)};
            },
            [](RestartOutcome acc, RestartOutcome item) {
                return (item.index < acc.index) ? std::move(item) : std::move(acc);
            });
        if (outcome.index == SIZE_MAX) continue;
        try_candidate(
            witness_from_fit(p.m, pattern, outcome.fit.low_rank, p.r, p.theta, p.opts), best);
    }
    return best;
}

RigidityBracket assemble_bracket(const SignMatrix& m, std::size_t r, std::optional<double> theta,
                                 std::size_t budget, std::uint64_t seed,
                                 const SearchOptions& opts) {
    const std::size_t n = m.order();
    if (r == 0 || r >= n) throw Error("upper search: need 1 <= r < n");
    if (theta && *theta <= 0) throw Error("upper search: theta must be positive");

    RigidityBracket bracket;
    bracket.n = n;
    bracket.r = r;
    bracket.theta = theta;
    bracket.seed = seed;
    bracket.budget = budget;

    const std::size_t exact_rank = rank_exact(to_exact(m));
    const bool hadamard = is_hadamard(m);

    // Proven floor: each change lowers the rank by at most one.
    Rational lower_exact(static_cast<long>(exact_rank > r ? exact_rank - r : 0));
    bracket.lower_sources.push_back("rank_floor");
    if (hadamard) {
        if (theta) {
            const Rational relaxed =
                relaxed_rigidity_lower_bound_exact(n, r, rational_from_double(*theta));
            if (relaxed > lower_exact) {
                lower_exact = relaxed;
                bracket.lower_sources.push_back("relaxed_rigidity_bound");
            }
        } else {
            const auto lb = rigidity_lower_bound({n, r, std::nullopt});
            if (lb.applicable && lb.value > lower_exact) {
                lower_exact = lb.value;
                bracket.lower_sources.push_back("rigidity_n2_over_4r");
            }
        }
    }

    std::optional<Rank1Result> oracle;
    if (r == 1 && n <= 20) {
        oracle = rank1_rigidity_exact(m);
        // R(1, theta) >= R(1): the unconstrained optimum is a valid floor.
        const Rational oracle_exact(static_cast<long>(oracle->value));
        if (oracle_exact > lower_exact) {
            lower_exact = oracle_exact;
            bracket.lower_sources.push_back("rank1_oracle");
        }
    }
    bracket.lower_exact = lower_exact;
    bracket.lower = lower_exact.get_d();

    const WitnessCandidate best = run_search({m, r, theta, budget, seed, opts});
    if (best.valid()) {
        bracket.upper = best.weight;
        bracket.witness = Perturbation(n, best.changes, theta);
    }

    if (oracle) {
        if (bracket.upper && *bracket.upper < oracle->value)
            throw Error("upper search: witness beats the exact r=1 oracle");
        // Sign flips move entries by 2, so the oracle witness (hence the
        // exact value) carries over whenever theta admits it.
        if (!theta || *theta >= 2.0) {
            bracket.exact = oracle->value;
            if (!bracket.upper || *bracket.upper > oracle->value) {
                bracket.upper = oracle->value;
                bracket.witness = Perturbation(n, oracle->witness.changes(), theta);
            }
        }
    }
    return bracket;
}

} // namespace

nlohmann::json RigidityBracket::to_json(const SignMatrix& base) const {
    nlohmann::json out{{"n", n},
                       {"r", r},
                       {"lower", lower},
                       {"lower_exact", rational_to_string(lower_exact)},
                       {"lower_sources", lower_sources},
                       {"seed", seed},
                       {"budget", budget}};
    out["theta"] = theta ? nlohmann::json(*theta) : nlohmann::json(nullptr);
    out["upper"] = upper ? nlohmann::json(*upper) : nlohmann::json(nullptr);
    out["exact"] = exact ? nlohmann::json(*exact) : nlohmann::json(nullptr);
    out["witness"] = witness ? witness->to_json(base) : nlohmann::json(nullptr);
    return out;
}

RigidityBracket rank_r_upper_search(const SignMatrix& m, std::size_t r, std::size_t budget,
                                    std::uint64_t seed, const SearchOptions& options) {
    return assemble_bracket(m, r, std::nullopt, budget, seed, options);
}

RigidityBracket relaxed_upper_search(const SignMatrix& m, std::size_t r, double theta,
                                     std::size_t budget, std::uint64_t seed,
                                     const SearchOptions& options) {
    if (theta <= 0) throw Error("relaxed_upper_search: theta must be positive");
    return assemble_bracket(m, r, theta, budget, seed, options);
}

} // namespace riglab
