#include "riglab/exact_scalar.hpp"

#include <cmath>

#include "riglab/error.hpp"

namespace riglab {

ExactScalar::ExactScalar(Rational a, Rational b, unsigned long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    normalize();
}

void ExactScalar::normalize() {
    if (d_ == 0 || d_ == 1) {
        if (d_ == 1) a_ += b_;
        b_ = 0;
        d_ = 0;
        return;
    }
    const auto [s, d] = square_free_split(d_);
    if (s != 1) {
        b_ *= static_cast<long>(s);
        d_ = d;
    }
    if (d_ == 1) { // perfect square: sqrt(d) rational
        a_ += b_;
        b_ = 0;
        d_ = 0;
        return;
    }
    if (b_ == 0) d_ = 0;
}

ExactScalar ExactScalar::sqrt_of(unsigned long n) {
    return ExactScalar(Rational(0), Rational(1), n);
}

unsigned long ExactScalar::joined_extension(const ExactScalar& x, const ExactScalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw Error("ExactScalar: mixed extensions sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                std::to_string(y.d_) + ")");
}

int ExactScalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2*d. Equality would force
    // sqrt(d) rational, impossible for square-free d >= 2.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * static_cast<long>(d_);
    if (lhs == rhs) throw Error("ExactScalar: sqrt(d) rational for square-free d");
    return (lhs > rhs) ? sa : sb;
}

ExactScalar ExactScalar::abs() const {
    return (sign() < 0) ? -*this : *this;
}

double ExactScalar::to_double() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
    d_ = joined_extension(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
    d_ = joined_extension(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
    const unsigned long d = joined_extension(*this, rhs);
    Rational a = a_ * rhs.a_;
    if (d != 0) a += b_ * rhs.b_ * static_cast<long>(d);
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = (b_ == 0) ? 0 : d;
    return *this;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw Error("ExactScalar: division by zero");
    if (d_ == 0) return ExactScalar(1 / a_);
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2*d)
    const Rational norm = a_ * a_ - b_ * b_ * static_cast<long>(d_);
    if (norm == 0) throw Error("ExactScalar: zero field norm for square-free d");
    return ExactScalar(a_ / norm, -b_ / norm, d_);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
    return *this *= rhs.inverse();
}

std::string format_scalar_token(const ExactScalar& x) {
    if (x.is_rational()) return rational_to_string(x.rational_part());
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_part();
    std::string out = a.get_num().get_str() + "/" + a.get_den().get_str();
    out += "+";
    out += b.get_num().get_str() + "/" + b.get_den().get_str();
    out += "*rt";
    return out;
}

ExactScalar parse_scalar_token(const std::string& token, unsigned long d) {
    const auto star = token.find("*rt");
    if (star == std::string::npos) return ExactScalar(parse_rational(token));
    if (star + 3 != token.size())
        throw Error("parse_scalar_token: trailing text in '" + token + "'");
    // Split "p/q+r/s*rt" at the '+' that separates the two fractions; the
    // radical numerator may itself start with '-'.
    const auto plus = token.find('+');
    if (plus == std::string::npos || plus == 0 || plus >= star)
        throw Error("parse_scalar_token: bad token '" + token + "'");
    if (d == 0)
        throw Error("parse_scalar_token: radical token '" + token + "' in a rational matrix (d = 0)");
    const Rational a = parse_rational(token.substr(0, plus));
    const Rational b = parse_rational(token.substr(plus + 1, star - plus - 1));
    return ExactScalar(a, b, d);
}

} // namespace riglab
