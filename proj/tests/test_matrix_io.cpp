#include <doctest.h>
#include <sstream>

#include "riglab/constructions.hpp"
#include "riglab/error.hpp"
#include "riglab/matrix_io.hpp"

using riglab::SignMatrix;

TEST_SUITE("matrix_io") {

TEST_CASE("sign matrix text form is bit-exact") {
    std::ostringstream os;
    riglab::write_matrix(os, SignMatrix::sylvester(1));
    CHECK(os.str() == "2 2 0\n1 1\n1 -1\n");

    std::istringstream is(os.str());
    const auto back = riglab::read_sign_matrix(is);
    CHECK(back == SignMatrix::sylvester(1));
}

TEST_CASE("exact matrix with radical entries round trips") {
    const auto shifted = riglab::diagonal_shift(SignMatrix::sylvester(3)).matrix; // Q(sqrt 2)
    std::ostringstream os;
    riglab::write_matrix(os, shifted);
    std::istringstream is(os.str());
    const auto back = riglab::read_exact_matrix(is);
    CHECK(back == shifted);
    CHECK(back.extension() == 2);
}

TEST_CASE("real matrices are stored as exact binary rationals") {
    riglab::RealMatrix m(2, 2);
    m << 0.5, -1.25, 3.0, 0.1;
    std::ostringstream os;
    riglab::write_matrix(os, m);
    const std::string text = os.str();
    CHECK(text.find("1/2") != std::string::npos);
    CHECK(text.find("-5/4") != std::string::npos);

    std::istringstream is(text);
    const auto back = riglab::read_real_matrix(is);
    CHECK(back(0, 0) == 0.5);
    CHECK(back(0, 1) == -1.25);
    CHECK(back(1, 1) == 0.1); // exact binary round trip, no drift
}

TEST_CASE("malformed input is rejected") {
    std::istringstream bad_header("2 -1 0\n1 1\n1 1\n");
    CHECK_THROWS_AS(riglab::read_sign_matrix(bad_header), riglab::Error);

    std::istringstream bad_token("2 2 0\n1 2\n1 1\n");
    CHECK_THROWS_AS(riglab::read_sign_matrix(bad_token), riglab::Error);

    std::istringstream missing("2 2 0\n1 1\n1\n");
    CHECK_THROWS_AS(riglab::read_sign_matrix(missing), riglab::Error);

    std::istringstream radical_without_d("1 1 0\n1/1+1/1*rt\n");
    CHECK_THROWS_AS(riglab::read_exact_matrix(radical_without_d), riglab::Error);
}

TEST_CASE("file round trip") {
    const std::string path = "io_roundtrip_test.mat";
    riglab::save_matrix(SignMatrix::sylvester(2), path);
    const auto back = riglab::load_sign_matrix(path);
    CHECK(back == SignMatrix::sylvester(2));
    std::remove(path.c_str());
    CHECK_THROWS_AS(riglab::load_sign_matrix("does_not_exist.mat"), riglab::Error);
}

} // TEST_SUITE
