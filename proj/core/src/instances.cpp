#include "riglab/instances.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <numeric>

#include "riglab/error.hpp"

namespace riglab {

RealMatrix random_rowspace_projection(const SignMatrix& h, std::size_t r, std::mt19937_64& rng) {
    const std::size_t n = h.order();
    if (r == 0 || r > n) throw Error("random_rowspace_projection: need 1 <= r <= n");
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealMatrix g(n, r);
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = gauss(rng);
    const Eigen::HouseholderQR<RealMatrix> qr(g);
    const RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, r);
    return to_real(h) * (q * q.transpose());
}

std::vector<std::size_t> random_nonempty_subset(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> set;
    do {
        set.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (rng() & 1) set.push_back(i);
    } while (set.empty());
    return set;
}

Perturbation random_theta_perturbation(const SignMatrix& h, double theta, std::size_t count,
                                       std::mt19937_64& rng) {
    const std::size_t n = h.order();
    if (theta <= 0) throw Error("random_theta_perturbation: theta must be positive");
    if (count > n * n) throw Error("random_theta_perturbation: too many changes requested");
    std::vector<std::size_t> positions(n * n);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    std::shuffle(positions.begin(), positions.end(), rng);
    std::uniform_real_distribution<double> offset(-theta, theta);
    std::vector<Change> changes;
    changes.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t i = positions[t] / n;
        const std::size_t j = positions[t] % n;
        const double value = static_cast<double>(h.at(i, j)) + offset(rng);
        changes.push_back({i, j, ExactScalar(rational_from_double(value))});
    }
    return Perturbation(n, std::move(changes), theta);
}

} // namespace riglab
