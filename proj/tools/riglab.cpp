// riglab command line: matrix generation, exact rank, rigidity bounds,
// encoding-protocol checks, explicit constructions, the rank-1 oracle,
// heuristic upper-bound search, spectral chains, and the combined
// reproduction suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>

#include "riglab/bounds.hpp"
#include "riglab/constructions.hpp"
#include "riglab/error.hpp"
#include "riglab/instances.hpp"
#include "riglab/matrix_io.hpp"
#include "riglab/protocol.hpp"
#include "riglab/reproduce.hpp"
#include "riglab/rigidity.hpp"
#include "riglab/spectral.hpp"
#include "riglab/submatrix_scan.hpp"

namespace {

using nlohmann::json;

void emit(const json& payload, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

int run(int argc, char** argv) {
    CLI::App app{"riglab: executable checks around Hadamard matrix rigidity"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a Hadamard matrix file");
    std::size_t gen_k = 0;
    std::size_t gen_cap = riglab::SignMatrix::kDefaultOrderCap;
    std::string gen_out;
    gen->add_option("--sylvester", gen_k, "tensor-power exponent k (order 2^k)")->required();
    gen->add_option("--out", gen_out, "output matrix file")->required();
    gen->add_option("--cap", gen_cap, "order cap");
    gen->callback([&] {
        const auto h = riglab::SignMatrix::sylvester(gen_k, gen_cap);
        riglab::save_matrix(h, gen_out);
        std::cout << "wrote order-" << h.order() << " Hadamard matrix to " << gen_out << "\n";
    });

    // --- rank ---
    auto* rank = app.add_subcommand("rank", "exact and numerical rank of a matrix file");
    std::string rank_file;
    double rank_tol = 1e-8;
    bool rank_json = false;
    rank->add_option("--matrix", rank_file, "matrix file")->required();
    rank->add_option("--tolerance", rank_tol, "relative singular value tolerance");
    rank->add_flag("--json", rank_json, "JSON output");
    rank->callback([&] {
        const auto m = riglab::load_exact_matrix(rank_file);
        const std::size_t exact = riglab::rank_exact(m);
        const std::size_t numeric = riglab::numerical_rank(riglab::to_real(m), rank_tol);
        emit(json{{"rows", m.rows()},
                  {"cols", m.cols()},
                  {"rank_exact", exact},
                  {"rank_numerical", numeric},
                  {"tolerance", rank_tol}},
             rank_json,
             "rank_exact = " + std::to_string(exact) +
                 ", rank_numerical = " + std::to_string(numeric) + "\n");
    });

    // --- bounds ---
    auto* bounds = app.add_subcommand("bounds", "evaluate every rigidity bound at (n, r, theta)");
    riglab::BoundQuery query;
    double bounds_theta = -1.0;
    bool bounds_json = false;
    bounds->add_option("--n", query.n, "matrix order")->required();
    bounds->add_option("--r", query.r, "target rank")->required();
    bounds->add_option("--theta", bounds_theta, "entry change cap");
    bounds->add_flag("--json", bounds_json, "JSON output");
    bounds->callback([&] {
        if (bounds_theta >= 0) query.theta = bounds_theta;
        const auto report = riglab::evaluate_bounds(query);
        std::string text;
        for (const auto& e : report.entries) {
            text += e.name + ": ";
            text += e.applicable ? riglab::rational_to_string(e.value) + " (~" +
                                       std::to_string(e.value_float) + ")"
                                 : std::string("not applicable");
            text += "\n";
        }
        emit(report.to_json(), bounds_json, text);
    });

    // --- verify-submatrix ---
    auto* scan = app.add_subcommand("verify-submatrix",
                                    "check rank >= ceil(ab/n) over submatrices");
    std::string scan_file;
    std::string scan_mode = "exhaustive";
    std::size_t scan_samples = 10000;
    std::uint64_t scan_seed = 1;
    std::size_t scan_max_pairs = 225;
    bool scan_json = false;
    scan->add_option("--matrix", scan_file, "Hadamard matrix file")->required();
    scan->add_option("--mode", scan_mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    scan->add_option("--samples", scan_samples, "sample count (sampled mode)");
    scan->add_option("--seed", scan_seed, "sampling seed");
    scan->add_option("--max-pairs", scan_max_pairs, "cap for exhaustive enumeration");
    scan->add_flag("--json", scan_json, "JSON output");
    scan->callback([&] {
        const auto h = riglab::load_sign_matrix(scan_file);
        const auto report = riglab::scan_all_submatrices(
            h, scan_mode == "exhaustive" ? riglab::ScanMode::Exhaustive
                                         : riglab::ScanMode::Sampled,
            scan_samples, scan_seed, scan_max_pairs);
        emit(report.to_json(), scan_json,
             "checked " + std::to_string(report.total_checked) + " pairs, " +
                 std::to_string(report.violations.size()) + " violations, min slack " +
                 std::to_string(report.min_slack) + "\n");
        if (!report.violations.empty()) throw riglab::Error("submatrix scan found violations");
    });

    // --- protocol ---
    auto* protocol = app.add_subcommand("protocol",
                                        "row-encoding success probabilities and the r/n ceiling");
    std::string protocol_matrix;
    std::string protocol_approx;
    long protocol_rank = -1;
    bool protocol_json = false;
    protocol->add_option("--matrix", protocol_matrix, "Hadamard matrix file")->required();
    protocol->add_option("--approx", protocol_approx, "approximation matrix file")->required();
    protocol->add_option("--rank", protocol_rank, "caller-supplied rank of the approximation");
    protocol->add_flag("--json", protocol_json, "JSON output");
    protocol->callback([&] {
        const auto h = riglab::load_sign_matrix(protocol_matrix);
        const auto approx_exact = riglab::load_exact_matrix(protocol_approx);
        const auto approx = riglab::to_real(approx_exact);
        std::size_t r = 0;
        std::string source;
        if (protocol_rank >= 0) {
            r = static_cast<std::size_t>(protocol_rank);
            source = "caller";
        } else {
            r = riglab::rank_exact(approx_exact);
            source = "exact";
        }
        const auto report = riglab::verify_nayak(h, approx, r, source);
        emit(report.to_json(), protocol_json,
             "p_avg = " + std::to_string(report.p_avg) + " vs r/n = " +
                 std::to_string(report.nayak_rhs) + ", sum p = " + std::to_string(report.sum_p) +
                 " vs r = " + std::to_string(report.r) + " -> " +
                 (report.pass ? "pass" : "FAIL") + "\n");
        if (!report.pass) throw riglab::Error("probability ceiling violated");
    });

    // --- construct ---
    auto* construct = app.add_subcommand("construct", "explicit low-rank perturbations");
    std::string construct_matrix;
    std::size_t construct_sylvester = SIZE_MAX;
    bool do_shift = false;
    bool do_zero = false;
    bool do_blocks = false;
    int shift_sign = -1;
    std::vector<std::size_t> zo_rows;
    std::vector<std::size_t> zo_cols;
    std::size_t blocks_j = 0;
    std::string construct_out;
    bool construct_json = false;
    construct->add_option("--matrix", construct_matrix, "input Hadamard matrix file");
    construct->add_option("--sylvester", construct_sylvester, "generate the input instead");
    construct->add_flag("--shift", do_shift, "H - sqrt(n) I over Q(sqrt(n))");
    construct->add_flag("--zero-outside", do_zero, "zero everything outside --rows x --cols");
    construct->add_flag("--blocks", do_blocks, "verify the block tensor structure at size 2^j");
    construct->add_option("--sign", shift_sign, "+1 or -1 for the shift")->check(CLI::IsMember({1, -1}));
    construct->add_option("--rows", zo_rows, "kept row indices")->delimiter(',');
    construct->add_option("--cols", zo_cols, "kept column indices")->delimiter(',');
    construct->add_option("--j", blocks_j, "block size exponent");
    construct->add_option("--out", construct_out, "output matrix file for the perturbed matrix");
    construct->add_flag("--json", construct_json, "JSON certificate output");
    construct->callback([&] {
        if (static_cast<int>(do_shift) + static_cast<int>(do_zero) + static_cast<int>(do_blocks) !=
            1)
            throw riglab::Error("construct: pick exactly one of --shift, --zero-outside, --blocks");
        riglab::SignMatrix h = (construct_sylvester != SIZE_MAX)
                                   ? riglab::SignMatrix::sylvester(construct_sylvester)
                                   : riglab::load_sign_matrix(construct_matrix);
        json certificate;
        if (do_shift) {
            const auto result = riglab::diagonal_shift(h, shift_sign);
            const std::size_t rank = riglab::rank_exact(result.matrix);
            const std::size_t weight = riglab::weight_diff(result.matrix, riglab::to_exact(h));
            certificate = {{"construction", "diagonal_shift"},
                           {"n", h.order()},
                           {"weight", weight},
                           {"rank_exact", rank},
                           {"claims_checked",
                            json{{"rank_is_half_order", rank == h.order() / 2},
                                 {"weight_is_order", weight == h.order()}}}};
            if (!construct_out.empty()) riglab::save_matrix(result.matrix, construct_out);
        } else if (do_zero) {
            const auto result = riglab::zero_outside(h, zo_rows, zo_cols);
            const std::size_t rank = riglab::rank_exact(result.matrix);
            const std::size_t kept_rank = riglab::rank_exact(
                riglab::submatrix(riglab::to_exact(h), zo_rows, zo_cols));
            certificate = {{"construction", "zero_outside"},
                           {"n", h.order()},
                           {"weight", result.pert.weight()},
                           {"rank_exact", rank},
                           {"claims_checked",
                            json{{"rank_equals_submatrix_rank", rank == kept_rank},
                                 {"rank_bound_holds",
                                  rank >= riglab::submatrix_rank_bound(
                                              zo_rows.size(), zo_cols.size(), h.order())}}}};
            if (!construct_out.empty()) riglab::save_matrix(result.matrix, construct_out);
        } else {
            const auto dec = riglab::block_decompose(h, blocks_j);
            certificate = {{"construction", "block_decompose"}, {"report", dec.to_json()}};
            if (!dec.ok) {
                emit(certificate, construct_json, "block structure check FAILED\n");
                throw riglab::Error("block decomposition verification failed");
            }
        }
        emit(certificate, construct_json, certificate.dump(2) + "\n");
    });

    // --- oracle-r1 ---
    auto* oracle = app.add_subcommand("oracle-r1", "exact rank-1 rigidity by enumeration");
    std::string oracle_matrix;
    std::string oracle_witness_out;
    bool oracle_json = false;
    oracle->add_option("--matrix", oracle_matrix, "sign matrix file")->required();
    oracle->add_option("--witness-out", oracle_witness_out, "write the perturbed matrix here");
    oracle->add_flag("--json", oracle_json, "JSON output");
    oracle->callback([&] {
        const auto m = riglab::load_sign_matrix(oracle_matrix);
        const auto result = riglab::rank1_rigidity_exact(m);
        json payload{{"n", m.order()},
                     {"exact", result.value},
                     {"witness", result.witness.to_json(m)}};
        if (!oracle_witness_out.empty()) {
            riglab::save_matrix(result.witness.apply(m), oracle_witness_out);
            payload["witness_file"] = oracle_witness_out;
        }
        emit(payload, oracle_json,
             "rank-1 rigidity = " + std::to_string(result.value) + "\n");
    });

    // --- search ---
    auto* search = app.add_subcommand("search", "heuristic rank-r upper bound search");
    std::string search_matrix;
    std::size_t search_r = 1;
    double search_theta = -1.0;
    std::size_t search_budget = 64;
    std::uint64_t search_seed = 1;
    std::string search_witness_out;
    bool search_json = false;
    search->add_option("--matrix", search_matrix, "sign matrix file")->required();
    search->add_option("--r", search_r, "target rank")->required();
    search->add_option("--theta", search_theta, "entry change cap");
    search->add_option("--budget", search_budget, "pattern proposals");
    search->add_option("--seed", search_seed, "search seed");
    search->add_option("--witness-out", search_witness_out, "write the best witness matrix here");
    search->add_flag("--json", search_json, "JSON output");
    search->callback([&] {
        const auto m = riglab::load_sign_matrix(search_matrix);
        const auto bracket =
            (search_theta > 0)
                ? riglab::relaxed_upper_search(m, search_r, search_theta, search_budget,
                                               search_seed)
                : riglab::rank_r_upper_search(m, search_r, search_budget, search_seed);
        json payload = bracket.to_json(m);
        if (!search_witness_out.empty() && bracket.witness) {
            riglab::save_matrix(bracket.witness->apply(m), search_witness_out);
            payload["witness_file"] = search_witness_out;
        }
        std::string upper_text =
            bracket.upper ? std::to_string(*bracket.upper) : std::string("unbounded");
        emit(payload, search_json,
             "bracket: lower = " + riglab::rational_to_string(bracket.lower_exact) +
                 ", upper = " + upper_text + "\n");
    });

    // --- spectral ---
    auto* spectral = app.add_subcommand("spectral", "trace/Cauchy-Schwarz chain check");
    std::string spectral_matrix;
    std::string spectral_approx;
    bool spectral_json = false;
    spectral->add_option("--matrix", spectral_matrix, "Hadamard matrix file")->required();
    spectral->add_option("--approx", spectral_approx, "approximation matrix file")->required();
    spectral->add_flag("--json", spectral_json, "JSON output");
    spectral->callback([&] {
        const auto h = riglab::load_sign_matrix(spectral_matrix);
        const auto ht = riglab::load_real_matrix(spectral_approx);
        const auto report = riglab::spectral_chain_check(h, ht);
        emit(report.to_json(), spectral_json,
             "sum inner = " + std::to_string(report.lhs_sum_inner) + " <= sqrt(rn) = " +
                 std::to_string(report.rhs_cs) + "; sum squares = " +
                 std::to_string(report.sum_squares) + " <= r = " +
                 std::to_string(report.quantum_rhs) + " -> " +
                 (report.pass ? "pass" : "FAIL") + "\n");
        if (!report.pass) throw riglab::Error("spectral chain violated");
    });

    // --- reproduce ---
    auto* reproduce = app.add_subcommand("reproduce", "run the full desk-scale suite");
    riglab::ReproduceOptions repro_opts;
    std::string repro_out;
    bool repro_json = false;
    reproduce->add_option("--seed", repro_opts.seed, "master seed");
    reproduce->add_option("--h8-samples", repro_opts.h8_scan_samples, "sampled scan size");
    reproduce->add_option("--out", repro_out, "write the JSON bundle to this file");
    reproduce->add_flag("--json", repro_json, "print the JSON bundle");
    reproduce->callback([&] {
        const auto result = riglab::run_reproduce(repro_opts);
        if (!repro_out.empty()) {
            std::ofstream os(repro_out);
            if (!os) throw riglab::Error("cannot open '" + repro_out + "' for writing");
            os << result.bundle.dump(2) << "\n";
        }
        if (repro_json)
            std::cout << result.bundle.dump(2) << "\n";
        else
            std::cout << riglab::render_summary(result.bundle);
        if (!result.pass) throw riglab::Error("reproduction suite found violations");
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const riglab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
