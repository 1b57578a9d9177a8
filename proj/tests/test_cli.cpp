// End-to-end checks of the command line surface: every subcommand is
// exercised through a real process, with JSON outputs parsed back.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <doctest.h>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#ifndef RIGLAB_CLI_PATH
#error "RIGLAB_CLI_PATH must point at the riglab binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(RIGLAB_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json parse_json(const std::string& text) {
    return nlohmann::json::parse(text);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen, rank, verify-submatrix pipeline") {
    const std::string file = "cli_h4.mat";
    auto gen = run_cli("gen --sylvester 2 --out " + file);
    CHECK(gen.exit_code == 0);

    auto rank = run_cli("rank --matrix " + file + " --json");
    CHECK(rank.exit_code == 0);
    const auto rank_json = parse_json(rank.output);
    CHECK(rank_json.at("rank_exact") == 4);
    CHECK(rank_json.at("rank_numerical") == 4);

    auto scan = run_cli("verify-submatrix --matrix " + file + " --mode exhaustive --json");
    CHECK(scan.exit_code == 0);
    const auto scan_json = parse_json(scan.output);
    CHECK(scan_json.at("total_checked") == 225);
    CHECK(scan_json.at("violations").empty());

    std::remove(file.c_str());
}

TEST_CASE("bounds json schema") {
    auto result = run_cli("bounds --n 4 --r 2 --theta 1 --json");
    CHECK(result.exit_code == 0);
    const auto payload = parse_json(result.output);
    CHECK(payload.at("query").at("n") == 4);
    bool found_relaxed = false;
    for (const auto& entry : payload.at("bounds")) {
        CHECK(entry.contains("name"));
        CHECK(entry.contains("value_rational"));
        CHECK(entry.contains("value_float"));
        CHECK(entry.contains("applicable"));
        CHECK(entry.contains("source"));
        if (entry.at("name") == "relaxed_rigidity") {
            found_relaxed = true;
            CHECK(entry.at("value_rational") == "16/7");
        }
    }
    CHECK(found_relaxed);
}

TEST_CASE("construct, protocol, spectral round trip") {
    const std::string h = "cli_h8.mat";
    const std::string approx = "cli_h8_zero.mat";
    CHECK(run_cli("gen --sylvester 3 --out " + h).exit_code == 0);

    auto construct = run_cli("construct --matrix " + h +
                             " --zero-outside --rows 0,1,2,3 --cols 0,1,2,3,4,5,6,7 --out " +
                             approx + " --json");
    CHECK(construct.exit_code == 0);
    const auto cert = parse_json(construct.output);
    CHECK(cert.at("rank_exact") == 4);
    CHECK(cert.at("claims_checked").at("rank_equals_submatrix_rank") == true);

    auto protocol = run_cli("protocol --matrix " + h + " --approx " + approx + " --json");
    CHECK(protocol.exit_code == 0);
    const auto report = parse_json(protocol.output);
    CHECK(report.at("pass") == true);
    CHECK(report.at("r") == 4);
    CHECK(report.at("rank_source") == "exact");

    auto spectral = run_cli("spectral --matrix " + h + " --approx " + approx + " --json");
    CHECK(spectral.exit_code == 0);
    CHECK(parse_json(spectral.output).at("pass") == true);

    auto shift = run_cli("construct --matrix " + h + " --shift --json");
    CHECK(shift.exit_code == 0);
    const auto shift_cert = parse_json(shift.output);
    CHECK(shift_cert.at("rank_exact") == 4);
    CHECK(shift_cert.at("weight") == 8);

    auto blocks = run_cli("construct --matrix " + h + " --blocks --j 1 --json");
    CHECK(blocks.exit_code == 0);
    CHECK(parse_json(blocks.output).at("report").at("ok") == true);

    std::remove(h.c_str());
    std::remove(approx.c_str());
}

TEST_CASE("oracle and search") {
    const std::string file = "cli_h4_oracle.mat";
    CHECK(run_cli("gen --sylvester 2 --out " + file).exit_code == 0);

    auto oracle = run_cli("oracle-r1 --matrix " + file + " --json");
    CHECK(oracle.exit_code == 0);
    CHECK(parse_json(oracle.output).at("exact") == 4);

    const std::string witness = "cli_h4_witness.mat";
    auto search = run_cli("search --matrix " + file +
                          " --r 2 --budget 8 --seed 1 --witness-out " + witness + " --json");
    CHECK(search.exit_code == 0);
    const auto bracket = parse_json(search.output);
    CHECK(bracket.at("upper") <= 4);
    CHECK(bracket.at("lower") == 2.0);
    std::ifstream check_witness(witness);
    CHECK(check_witness.good());

    std::remove(file.c_str());
    std::remove(witness.c_str());
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run_cli("rank").exit_code != 0);                       // missing required option
    CHECK(run_cli("rank --matrix missing.mat").exit_code != 0);  // absent file
    CHECK(run_cli("no-such-command").exit_code != 0);
    CHECK(run_cli("construct --sylvester 2 --shift --zero-outside").exit_code != 0);
}

} // TEST_SUITE
