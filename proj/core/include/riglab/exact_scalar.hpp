#pragma once

#include <string>

#include "riglab/rational.hpp"

namespace riglab {

/// Element of the quadratic field Q(sqrt(d)): value = a + b*sqrt(d) with
/// rational a, b and square-free natural d. d == 0 encodes a plain rational.
///
/// Construction normalizes: square factors of d fold into b, and when
/// sqrt(d) is itself rational (d a perfect square) the value collapses to a
/// plain rational. The representation is therefore canonical and equality
/// is exact coefficient equality: a + b*sqrt(d) = 0 iff a = b = 0.
///
/// Arithmetic between elements of different nonzero extensions is rejected;
/// plain rationals combine with any extension.
class ExactScalar {
  public:
    ExactScalar() = default;
    ExactScalar(long v) : a_(v) {} // NOLINT: implicit by design, mirrors integer literals
    explicit ExactScalar(Rational a) : a_(std::move(a)) {}
    ExactScalar(Rational a, Rational b, unsigned long d);

    /// sqrt(n) as an exact scalar; rational when n is a perfect square.
    static ExactScalar sqrt_of(unsigned long n);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    unsigned long extension() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return d_ == 0; }

    /// Exact sign in the real embedding (sqrt(d) > 0): -1, 0, or +1.
    int sign() const;
    ExactScalar abs() const;

    double to_double() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& rhs);
    ExactScalar& operator-=(const ExactScalar& rhs);
    ExactScalar& operator*=(const ExactScalar& rhs);
    ExactScalar& operator/=(const ExactScalar& rhs);

    friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
    friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
    friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
    friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }

    /// Multiplicative inverse; throws on zero.
    ExactScalar inverse() const;

    bool operator==(const ExactScalar& rhs) const {
        return d_ == rhs.d_ && a_ == rhs.a_ && b_ == rhs.b_;
    }
    bool operator!=(const ExactScalar& rhs) const { return !(*this == rhs); }

  private:
    Rational a_{0};
    Rational b_{0};
    unsigned long d_ = 0;

    void normalize();
    /// Common extension of two operands; throws on mixed nonzero extensions.
    static unsigned long joined_extension(const ExactScalar& x, const ExactScalar& y);
};

/// Token grammar of the matrix text format: "p", "p/q", or "p/q+r/s*rt"
/// where "rt" stands for sqrt(d) of the enclosing matrix header.
/// Signs are folded into numerators ("1/1+-1/2*rt").
std::string format_scalar_token(const ExactScalar& x);
ExactScalar parse_scalar_token(const std::string& token, unsigned long d);

} // namespace riglab
