#include "riglab/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "riglab/error.hpp"

namespace riglab {

namespace {

struct Header {
    std::size_t rows;
    std::size_t cols;
    unsigned long d;
};

Header read_header(std::istream& is) {
    long long rows = 0;
    long long cols = 0;
    long long d = 0;
    if (!(is >> rows >> cols >> d)) throw Error("matrix read: bad header");
    if (rows <= 0 || cols <= 0 || d < 0) throw Error("matrix read: non-positive shape or d < 0");
    return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
            static_cast<unsigned long>(d)};
}

std::string next_token(std::istream& is) {
    std::string tok;
    if (!(is >> tok)) throw Error("matrix read: missing entries");
    return tok;
}

} // namespace

void write_matrix(std::ostream& os, const ExactMatrix& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.extension() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << format_scalar_token(m.at(i, j));
        }
        os << '\n';
    }
}

void write_matrix(std::ostream& os, const SignMatrix& m) {
    const std::size_t n = m.order();
    os << n << ' ' << n << ' ' << 0 << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
}

void write_matrix(std::ostream& os, const RealMatrix& m) {
    write_matrix(os, to_exact(m));
}

ExactMatrix read_exact_matrix(std::istream& is) {
    const Header h = read_header(is);
    std::vector<ExactScalar> entries;
    entries.reserve(h.rows * h.cols);
    for (std::size_t i = 0; i < h.rows * h.cols; ++i)
        entries.push_back(parse_scalar_token(next_token(is), h.d));
    return ExactMatrix(h.rows, h.cols, std::move(entries));
}

SignMatrix read_sign_matrix(std::istream& is) {
    const Header h = read_header(is);
    if (h.rows != h.cols) throw Error("sign matrix read: not square");
    if (h.d != 0) throw Error("sign matrix read: d must be 0");
    std::vector<std::int8_t> signs;
    signs.reserve(h.rows * h.cols);
    for (std::size_t i = 0; i < h.rows * h.cols; ++i) {
        const std::string tok = next_token(is);
        if (tok == "1")
            signs.push_back(1);
        else if (tok == "-1")
            signs.push_back(-1);
        else
            throw Error("sign matrix read: token '" + tok + "' not in {1, -1}");
    }
    return SignMatrix(h.rows, std::move(signs));
}

RealMatrix read_real_matrix(std::istream& is) {
    return to_real(read_exact_matrix(is));
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open '" + path + "' for reading");
    return is;
}

} // namespace

void save_matrix(const ExactMatrix& m, const std::string& path) {
    auto os = open_out(path);
    write_matrix(os, m);
}

void save_matrix(const SignMatrix& m, const std::string& path) {
    auto os = open_out(path);
    write_matrix(os, m);
}

void save_matrix(const RealMatrix& m, const std::string& path) {
    auto os = open_out(path);
    write_matrix(os, m);
}

ExactMatrix load_exact_matrix(const std::string& path) {
    auto is = open_in(path);
    return read_exact_matrix(is);
}

SignMatrix load_sign_matrix(const std::string& path) {
    auto is = open_in(path);
    return read_sign_matrix(is);
}

RealMatrix load_real_matrix(const std::string& path) {
    auto is = open_in(path);
    return read_real_matrix(is);
}

} // namespace riglab
