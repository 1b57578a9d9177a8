#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "riglab/rational.hpp"

namespace riglab {

/// The (n, r, theta) triple every bound formula is evaluated at.
struct BoundQuery {
    std::size_t n = 0;
    std::size_t r = 0;
    std::optional<double> theta;

    /// Enforces 1 <= r <= n and theta >= 0 when present.
    void validate() const;
};

struct BoundEntry {
    std::string name;
    Rational value{0};
    double value_float = 0.0;
    bool applicable = true;
    std::string source;
};

struct BoundReport {
    BoundQuery query;
    std::vector<BoundEntry> entries;
    nlohmann::json to_json() const;
};

/// n - r: each change reduces the rank by at most one, so a full-rank
/// matrix needs at least that many changes.
std::size_t valiant_floor(const BoundQuery& q);

/// ceil(a*b / n): rank lower bound for every a x b submatrix of an
/// order-n Hadamard matrix; the ceiling is sound because rank is integral.
std::size_t submatrix_rank_bound(std::size_t a, std::size_t b, std::size_t n);

struct RigidityLowerBound {
    bool applicable = false;  // requires r <= n/2
    Rational value{0};        // n^2 / 4r
    Rational kr_comparison{0}; // n^2 / 256r, the earlier proof's constant
};

/// Rigidity lower bound n^2/4r for r <= n/2, with the weaker
/// Kashin-Razborov constant reported for comparison.
RigidityLowerBound rigidity_lower_bound(const BoundQuery& q);

/// Relaxed rigidity lower bound n^2 (n-r) / (2 theta n + r (theta^2 + 2 theta)),
/// exact in rational arithmetic. Requires theta > 0.
Rational relaxed_rigidity_lower_bound_exact(std::size_t n, std::size_t r, const Rational& theta);

/// Float evaluation of the same formula; throws when theta is absent or zero.
double relaxed_rigidity_lower_bound(const BoundQuery& q);

enum class ThetaRegime { Lokam, KashinRazborov };

/// KashinRazborov iff theta >= n/r (boundary inclusive); Lokam otherwise.
/// The comparison is exact.
ThetaRegime theta_regime(const BoundQuery& q);

/// Asymptotic shape of the relaxed bound in the given regime.
const char* regime_shape(ThetaRegime regime);

/// min(r / n_messages, 1): ceiling on the average success probability of
/// decoding one of n_messages outcomes from an r-dimensional encoding.
double nayak_bound(std::size_t n_messages, std::size_t r);
Rational nayak_bound_exact(std::size_t n_messages, std::size_t r);

/// Evaluates every bound the query admits and flags the inapplicable ones.
BoundReport evaluate_bounds(const BoundQuery& q);

} // namespace riglab
