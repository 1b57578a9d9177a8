#pragma once

#include <iosfwd>
#include <string>

#include "riglab/exact_matrix.hpp"
#include "riglab/real_matrix.hpp"
#include "riglab/sign_matrix.hpp"

namespace riglab {

/// Matrix text format.
///   line 1:  rows cols d        (d = extension parameter, 0 = rational)
///   then rows x cols whitespace-separated tokens "p", "p/q", or
///   "p/q+r/s*rt" with rt = sqrt(d), signs folded into numerators.
///
/// Sign matrices restrict tokens to "1" and "-1". Real matrices are
/// written as their exact binary rationals and read back via an exact
/// parse followed by conversion to double.

void write_matrix(std::ostream& os, const ExactMatrix& m);
void write_matrix(std::ostream& os, const SignMatrix& m);
void write_matrix(std::ostream& os, const RealMatrix& m);

ExactMatrix read_exact_matrix(std::istream& is);
SignMatrix read_sign_matrix(std::istream& is);
RealMatrix read_real_matrix(std::istream& is);

void save_matrix(const ExactMatrix& m, const std::string& path);
void save_matrix(const SignMatrix& m, const std::string& path);
void save_matrix(const RealMatrix& m, const std::string& path);

ExactMatrix load_exact_matrix(const std::string& path);
SignMatrix load_sign_matrix(const std::string& path);
RealMatrix load_real_matrix(const std::string& path);

} // namespace riglab
