#include "riglab/perturbation.hpp"

#include <algorithm>

#include "riglab/error.hpp"

namespace riglab {

Perturbation::Perturbation(std::size_t base_n, std::vector<Change> changes,
                           std::optional<double> theta_cap)
    : base_n_(base_n), changes_(std::move(changes)), theta_cap_(theta_cap) {
    if (base_n_ == 0) throw Error("Perturbation: empty base order");
    if (theta_cap_ && *theta_cap_ < 0) throw Error("Perturbation: negative theta cap");
    std::sort(changes_.begin(), changes_.end(), [](const Change& a, const Change& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (std::size_t i = 0; i < changes_.size(); ++i) {
        const auto& c = changes_[i];
        if (c.row >= base_n_ || c.col >= base_n_)
            throw Error("Perturbation: change position (" + std::to_string(c.row) + "," +
                        std::to_string(c.col) + ") out of range");
        if (i > 0 && changes_[i - 1].row == c.row && changes_[i - 1].col == c.col)
            throw Error("Perturbation: duplicate position (" + std::to_string(c.row) + "," +
                        std::to_string(c.col) + ")");
    }
}

void Perturbation::check_theta(const SignMatrix& base) const {
    if (!theta_cap_) return;
    const Rational cap = rational_from_double(*theta_cap_);
    for (const auto& c : changes_) {
        const ExactScalar old(static_cast<long>(base.at(c.row, c.col)));
        const ExactScalar delta = (c.value - old).abs();
        // |delta| <= cap, decided exactly
        const ExactScalar slack = ExactScalar(cap) - delta;
        if (slack.sign() < 0)
            throw Error("Perturbation: change at (" + std::to_string(c.row) + "," +
                        std::to_string(c.col) + ") exceeds theta cap");
    }
}

ExactMatrix Perturbation::apply(const SignMatrix& base) const {
    if (base.order() != base_n_) throw Error("Perturbation: base order mismatch");
    check_theta(base);
    ExactMatrix out = to_exact(base);
    for (const auto& c : changes_) out.set(c.row, c.col, c.value);
    return out;
}

RealMatrix Perturbation::apply_real(const SignMatrix& base) const {
    if (base.order() != base_n_) throw Error("Perturbation: base order mismatch");
    check_theta(base);
    RealMatrix out = to_real(base);
    for (const auto& c : changes_)
        out(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col)) =
            c.value.to_double();
    return out;
}

std::vector<std::size_t> Perturbation::row_hamming(const SignMatrix& base) const {
    if (base.order() != base_n_) throw Error("Perturbation: base order mismatch");
    std::vector<std::size_t> delta(base_n_, 0);
    for (const auto& c : changes_) {
        const ExactScalar old(static_cast<long>(base.at(c.row, c.col)));
        if (c.value != old) ++delta[c.row];
    }
    return delta;
}

nlohmann::json Perturbation::to_json(const SignMatrix& base) const {
    nlohmann::json changes = nlohmann::json::array();
    for (const auto& c : changes_) {
        changes.push_back({{"row", c.row},
                           {"col", c.col},
                           {"old", base.at(c.row, c.col)},
                           {"new", format_scalar_token(c.value)},
                           {"new_float", c.value.to_double()}});
    }
    nlohmann::json out{{"base_n", base_n_}, {"weight", weight()}, {"changes", changes}};
    if (theta_cap_)
        out["theta_cap"] = *theta_cap_;
    else
        out["theta_cap"] = nullptr;
    return out;
}

} // namespace riglab
