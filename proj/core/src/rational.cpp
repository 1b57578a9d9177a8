#include "riglab/rational.hpp"

#include <cctype>
#include <cmath>

#include "riglab/error.hpp"

namespace riglab {

Rational make_rational(long num, long den) {
    if (den == 0) throw Error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw Error("rational_from_double: non-finite value");
    return Rational(x); // binary doubles convert exactly
}

std::pair<unsigned long, unsigned long> square_free_split(unsigned long n) {
    if (n == 0) return {0, 0};
    unsigned long s = 1;
    unsigned long d = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        unsigned long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned long i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) d *= p;
    }
    d *= n; // leftover prime
    return {s, d};
}

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    if (!is_integer_text(num)) throw Error("parse_rational: bad token '" + text + "'");
    if (slash == std::string::npos) {
        Rational q(num, 10);
        q.canonicalize();
        return q;
    }
    const std::string den = text.substr(slash + 1);
    if (!is_integer_text(den) || den[0] == '-')
        throw Error("parse_rational: bad token '" + text + "'");
    mpz_class den_z(den, 10);
    if (den_z == 0) throw Error("parse_rational: zero denominator in '" + text + "'");
    Rational q(text, 10);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

} // namespace riglab
