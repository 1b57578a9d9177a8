#include "riglab/bounds.hpp"

#include "riglab/error.hpp"

namespace riglab {

void BoundQuery::validate() const {
    if (n == 0) throw Error("BoundQuery: n must be positive");
    if (r == 0 || r > n) throw Error("BoundQuery: r must satisfy 1 <= r <= n");
    if (theta && *theta < 0) throw Error("BoundQuery: theta must be nonnegative");
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json q{{"n", query.n}, {"r", query.r}};
    if (query.theta)
        q["theta"] = *query.theta;
    else
        q["theta"] = nullptr;
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& e : entries) {
        bounds.push_back({{"name", e.name},
                          {"value_rational", rational_to_string(e.value)},
                          {"value_float", e.value_float},
                          {"applicable", e.applicable},
                          {"source", e.source}});
    }
    return nlohmann::json{{"query", q}, {"bounds", bounds}};
}

std::size_t valiant_floor(const BoundQuery& q) {
    q.validate();
    return q.n - q.r;
}

std::size_t submatrix_rank_bound(std::size_t a, std::size_t b, std::size_t n) {
    if (n == 0 || a == 0 || b == 0 || a > n || b > n)
        throw Error("submatrix_rank_bound: need 1 <= a, b <= n");
    return (a * b + n - 1) / n;
}

RigidityLowerBound rigidity_lower_bound(const BoundQuery& q) {
    q.validate();
    RigidityLowerBound out;
    if (2 * q.r > q.n) return out; // only valid for r <= n/2
    out.applicable = true;
    const Rational n2(static_cast<long>(q.n * q.n));
    out.value = n2 / make_rational(4 * static_cast<long>(q.r));
    out.kr_comparison = n2 / make_rational(256 * static_cast<long>(q.r));
    return out;
}

Rational relaxed_rigidity_lower_bound_exact(std::size_t n, std::size_t r, const Rational& theta) {
    if (n == 0 || r == 0 || r > n)
        throw Error("relaxed_rigidity_lower_bound: need 1 <= r <= n");
    if (theta <= 0) throw Error("relaxed_rigidity_lower_bound: theta must be positive");
    const Rational nn(static_cast<long>(n));
    const Rational rr(static_cast<long>(r));
    const Rational numer = nn * nn * (nn - rr);
    const Rational denom = 2 * theta * nn + rr * (theta * theta + 2 * theta);
    return numer / denom;
}

double relaxed_rigidity_lower_bound(const BoundQuery& q) {
    q.validate();
    if (!q.theta || *q.theta <= 0)
        throw Error("relaxed_rigidity_lower_bound: theta absent or zero");
    const double n = static_cast<double>(q.n);
    const double r = static_cast<double>(q.r);
    const double t = *q.theta;
    return n * n * (n - r) / (2 * t * n + r * (t * t + 2 * t));
}

ThetaRegime theta_regime(const BoundQuery& q) {
    q.validate();
    if (!q.theta) throw Error("theta_regime: theta absent");
    const Rational t = rational_from_double(*q.theta);
    const Rational split = make_rational(static_cast<long>(q.n), static_cast<long>(q.r));
    return (t >= split) ? ThetaRegime::KashinRazborov : ThetaRegime::Lokam;
}

const char* regime_shape(ThetaRegime regime) {
    switch (regime) {
        case ThetaRegime::KashinRazborov: return "n^2(n-r)/(r*theta^2)";
        case ThetaRegime::Lokam: return "n(n-r)/theta";
    }
    return "";
}

double nayak_bound(std::size_t n_messages, std::size_t r) {
    return nayak_bound_exact(n_messages, r).get_d();
}

Rational nayak_bound_exact(std::size_t n_messages, std::size_t r) {
    if (n_messages == 0 || r == 0) throw Error("nayak_bound: need n >= 1 and r >= 1");
    if (r >= n_messages) return Rational(1); // probabilities cap at 1
    return make_rational(static_cast<long>(r), static_cast<long>(n_messages));
}

BoundReport evaluate_bounds(const BoundQuery& q) {
    q.validate();
    BoundReport report;
    report.query = q;

    {
        BoundEntry e;
        e.name = "valiant_floor";
        e.value = Rational(static_cast<long>(valiant_floor(q)));
        e.value_float = e.value.get_d();
        e.source = "n - r; each change reduces rank by at most one";
        report.entries.push_back(e);
    }
    {
        const auto lb = rigidity_lower_bound(q);
        BoundEntry e;
        e.name = "rigidity_n2_over_4r";
        e.applicable = lb.applicable;
        e.value = lb.value;
        e.value_float = lb.value.get_d();
        e.source = "n^2/(4r) for r <= n/2";
        report.entries.push_back(e);

        BoundEntry kr;
        kr.name = "kashin_razborov_constant";
        kr.applicable = lb.applicable;
        kr.value = lb.kr_comparison;
        kr.value_float = lb.kr_comparison.get_d();
        kr.source = "n^2/(256r), the earlier proof's constant, for comparison";
        report.entries.push_back(kr);
    }
    {
        BoundEntry e;
        e.name = "relaxed_rigidity";
        if (q.theta && *q.theta > 0) {
            e.value = relaxed_rigidity_lower_bound_exact(q.n, q.r, rational_from_double(*q.theta));
            e.value_float = relaxed_rigidity_lower_bound(q);
            const auto regime = theta_regime(q);
            e.source = std::string("n^2(n-r)/(2 theta n + r(theta^2 + 2 theta)); regime ") +
                       (regime == ThetaRegime::KashinRazborov ? "theta >= n/r" : "theta < n/r") +
                       ", shape " + regime_shape(regime) +
                       " (regime split follows theta vs n/r; the alternative r/n split that "
                       "sometimes appears reads like a typo)";
        } else {
            e.applicable = false;
            e.source = "requires theta > 0";
        }
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "nayak";
        e.value = nayak_bound_exact(q.n, q.r);
        e.value_float = e.value.get_d();
        e.source = "average decoding probability <= r/n, capped at 1";
        report.entries.push_back(e);
    }
    return report;
}

} // namespace riglab
