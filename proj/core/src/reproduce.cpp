#include "riglab/reproduce.hpp"

#include <random>
#include <sstream>

#include "riglab/bounds.hpp"
#include "riglab/constructions.hpp"
#include "riglab/exact_matrix.hpp"
#include "riglab/instances.hpp"
#include "riglab/protocol.hpp"
#include "riglab/rigidity.hpp"
#include "riglab/spectral.hpp"
#include "riglab/submatrix_scan.hpp"

namespace riglab {

namespace {

struct Section {
    std::string name;
    std::size_t checks = 0;
    std::size_t violations = 0;
    nlohmann::json details = nlohmann::json::object();

    void check(bool ok) {
        ++checks;
        if (!ok) ++violations;
    }
};

nlohmann::json section_json(const Section& s) {
    return {{"name", s.name},
            {"checks", s.checks},
            {"violations", s.violations},
            {"details", s.details}};
}

Section scan_section(const ReproduceOptions& opts) {
    Section s{"submatrix_rank_scan"};
    const auto h4 = SignMatrix::sylvester(2);
    const auto exhaustive = scan_all_submatrices(h4, ScanMode::Exhaustive);
    s.checks += exhaustive.total_checked;
    s.violations += exhaustive.violations.size();
    s.details["h4_exhaustive"] = exhaustive.to_json();

    const auto h8 = SignMatrix::sylvester(3);
    const auto sampled =
        scan_all_submatrices(h8, ScanMode::Sampled, opts.h8_scan_samples, opts.seed);
    s.checks += sampled.total_checked;
    s.violations += sampled.violations.size();
    s.details["h8_sampled"] = sampled.to_json();
    return s;
}

Section oracle_section() {
    Section s{"rank1_oracle_vs_rigidity_bound"};
    const auto h2 = SignMatrix::sylvester(1);
    const auto h4 = SignMatrix::sylvester(2);
    const auto r2 = rank1_rigidity_exact(h2);
    const auto r4 = rank1_rigidity_exact(h4);
    const auto b2 = rigidity_lower_bound({2, 1, std::nullopt});
    const auto b4 = rigidity_lower_bound({4, 1, std::nullopt});
    s.check(r2.value == 1);
    s.check(b2.applicable && Rational(static_cast<long>(r2.value)) >= b2.value);
    s.check(r4.value == 4);
    s.check(b4.applicable && Rational(static_cast<long>(r4.value)) == b4.value);
    s.details["h2_exact"] = r2.value;
    s.details["h4_exact"] = r4.value;
    s.details["h4_bound"] = rational_to_string(b4.value);
    return s;
}

Section shift_section(const ReproduceOptions& opts) {
    Section s{"diagonal_shift_certificates"};
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t k = 1; k <= opts.max_shift_k; ++k) {
        const auto h = SignMatrix::sylvester(k);
        const std::size_t n = h.order();
        const auto shifted = diagonal_shift(h);
        const std::size_t rank = rank_exact(shifted.matrix);
        const std::size_t weight = weight_diff(shifted.matrix, to_exact(h));
        s.check(rank == n / 2);
        s.check(weight == n);
        list.push_back({{"k", k}, {"n", n}, {"rank", rank}, {"weight", weight}});
    }
    s.details["certificates"] = list;
    return s;
}

Section block_section(const ReproduceOptions& opts) {
    Section s{"block_decomposition"};
    nlohmann::json blocks = nlohmann::json::array();
    for (std::size_t k = 0; k <= opts.max_block_k; ++k) {
        const auto h = SignMatrix::sylvester(k);
        for (std::size_t j = 0; j <= k; ++j) {
            const auto dec = block_decompose(h, j);
            s.check(dec.ok);
            blocks.push_back({{"k", k}, {"j", j}, {"ok", dec.ok}});
        }
    }
    nlohmann::json counts = nlohmann::json::array();
    for (std::size_t k = 1; k <= opts.max_block_k; ++k) {
        for (std::size_t r = 1; 2 * r <= (std::size_t{1} << k); r *= 2) {
            const auto report = midrijanis_lower_report(k, r);
            s.check(report.matches);
            counts.push_back(report.to_json());
        }
    }
    s.details["decompositions"] = blocks;
    s.details["block_counts"] = counts;
    return s;
}

Section nayak_section(const ReproduceOptions& opts) {
    Section s{"nayak_invariant"};
    std::mt19937_64 rng(opts.seed);
    std::size_t instances = 0;

    for (std::size_t k : {3u, 4u}) {
        const auto h = SignMatrix::sylvester(k);
        for (std::size_t r : {1u, 2u, 4u}) {
            for (std::size_t t = 0; t < opts.nayak_projection_instances; ++t) {
                const RealMatrix ht = random_rowspace_projection(h, r, rng);
                const auto report = verify_nayak(h, ht, r, "caller");
                s.check(report.pass);
                ++instances;
            }
        }
    }

    const auto h8 = SignMatrix::sylvester(3);
    for (std::size_t t = 0; t < opts.nayak_zero_outside_instances; ++t) {
        const auto rows = random_nonempty_subset(h8.order(), rng);
        const auto cols = random_nonempty_subset(h8.order(), rng);
        const auto zo = zero_outside(h8, rows, cols);
        const std::size_t r = rank_exact(zo.matrix);
        const auto report = verify_nayak(h8, to_real(zo.matrix), r, "exact");
        s.check(report.pass);
        ++instances;
    }

    std::uniform_int_distribution<std::size_t> weight_dist(1, h8.order() * h8.order());
    for (std::size_t t = 0; t < opts.nayak_perturbation_instances; ++t) {
        const auto pert = random_theta_perturbation(h8, 1.0, weight_dist(rng), rng);
        const RealMatrix ht = pert.apply_real(h8);
        const std::size_t r = numerical_rank(ht);
        const auto report = verify_nayak(h8, ht, r, "numerical");
        s.check(report.pass);
        ++instances;
    }
    s.details["instances"] = instances;
    return s;
}

Section regev_section(const ReproduceOptions& opts) {
    Section s{"regev_trace_chain"};
    std::mt19937_64 rng(opts.seed + 1);
    std::size_t instances = 0;
    for (std::size_t t = 0; t < opts.regev_instances; ++t) {
        const std::size_t k = 2 + (t % 2);     // H_4 and H_8
        const std::size_t r = 1 + (t % 4);     // ranks 1..4
        const auto h = SignMatrix::sylvester(k);
        const RealMatrix ht = random_rowspace_projection(h, r, rng);
        const auto iso = rowspace_isometry(ht);
        const auto povm = hadamard_povm_in_rowspace(h, iso.basis);
        std::vector<StateVector> states;
        for (Eigen::Index i = 0; i < iso.coords.rows(); ++i)
            states.push_back(StateVector::from_real(iso.coords.row(i).transpose()));
        const auto report = regev_chain_check(states, povm);
        s.check(report.pass);
        ++instances;
    }
    s.details["instances"] = instances;
    return s;
}

Section theta_chain_section(const ReproduceOptions& opts) {
    Section s{"relaxed_chain"};
    std::mt19937_64 rng(opts.seed + 2);
    std::size_t instances = 0;
    std::size_t vacuous = 0;
    for (double theta : {0.5, 1.0, 2.0}) {
        for (std::size_t k : {2u, 3u}) {
            const auto h = SignMatrix::sylvester(k);
            std::uniform_int_distribution<std::size_t> weight_dist(1, h.order() * h.order());
            for (std::size_t t = 0; t < opts.theta_chain_instances; ++t) {
                const auto pert = random_theta_perturbation(h, theta, weight_dist(rng), rng);
                const auto report = theta_chain_check(h, pert);
                s.check(report.pass);
                vacuous += report.vacuous_rows;
                ++instances;
            }
        }
    }
    s.details["instances"] = instances;
    s.details["vacuous_rows"] = vacuous;
    s.details["formula_16_over_7"] =
        rational_to_string(relaxed_rigidity_lower_bound_exact(4, 2, Rational(1)));
    s.check(relaxed_rigidity_lower_bound_exact(4, 2, Rational(1)) == make_rational(16, 7));
    return s;
}

Section spectral_section(const ReproduceOptions& opts) {
    Section s{"spectral_chain"};
    std::mt19937_64 rng(opts.seed + 3);
    std::size_t instances = 0;
    std::size_t dominance = 0;
    for (std::size_t t = 0; t < opts.spectral_instances; ++t) {
        const std::size_t k = 2 + (t % 2);
        const auto h = SignMatrix::sylvester(k);
        RealMatrix ht;
        if (t % 2 == 0) {
            ht = random_rowspace_projection(h, 1 + (t % 4), rng);
        } else {
            const auto rows = random_nonempty_subset(h.order(), rng);
            const auto cols = random_nonempty_subset(h.order(), rng);
            ht = to_real(zero_outside(h, rows, cols).matrix);
        }
        const auto report = spectral_chain_check(h, ht);
        s.check(report.pass);
        if (report.dominance_witness) ++dominance;
        ++instances;
    }
    // the tight instance: two live rows of H_4
    const auto h4 = SignMatrix::sylvester(2);
    const auto zo = zero_outside(h4, {0, 1}, {0, 1, 2, 3});
    const auto tight = spectral_chain_check(h4, to_real(zo.matrix));
    s.check(tight.pass);
    s.check(std::abs(tight.sum_squares - 2.0) < 1e-9);
    s.check(tight.lhs_sum_inner < tight.rhs_cs - 0.5);
    s.details["tight_instance"] = tight.to_json();
    s.details["instances"] = instances;
    s.details["dominance_witnesses"] = dominance;
    return s;
}

} // namespace

ReproduceResult run_reproduce(const ReproduceOptions& options) {
    ReproduceResult result;
    nlohmann::json sections = nlohmann::json::array();

    const Section parts[] = {
        scan_section(options),     oracle_section(),
        shift_section(options),    block_section(options),
        nayak_section(options),    regev_section(options),
        theta_chain_section(options), spectral_section(options),
    };
    for (const auto& s : parts) {
        sections.push_back(section_json(s));
        result.total_checks += s.checks;
        result.total_violations += s.violations;
    }

    result.pass = (result.total_violations == 0);
    result.bundle = {{"config",
                      {{"seed", options.seed},
                       {"h8_scan_samples", options.h8_scan_samples},
                       {"regev_instances", options.regev_instances},
                       {"spectral_instances", options.spectral_instances}}},
                     {"sections", sections},
                     {"total_checks", result.total_checks},
                     {"total_violations", result.total_violations},
                     {"pass", result.pass}};
    return result;
}

std::string render_summary(const nlohmann::json& bundle) {
    std::ostringstream os;
    os << "reproduction suite\n";
    for (const auto& s : bundle.at("sections")) {
        os << "  " << s.at("name").get<std::string>() << ": "
           << s.at("checks").get<std::size_t>() << " checks, "
           << s.at("violations").get<std::size_t>() << " violations\n";
    }
    os << "total: " << bundle.at("total_checks").get<std::size_t>() << " checks, "
       << bundle.at("total_violations").get<std::size_t>() << " violations -> "
       << (bundle.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace riglab
