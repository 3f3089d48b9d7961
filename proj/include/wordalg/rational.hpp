#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace wordalg {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

inline Rational abs_of(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// floor as an exact integer (round toward -infinity)
inline Int floor_rational(const Rational& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

inline Int ceil_rational(const Rational& q) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

// parses "num", "num/den"
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse \"" + s + "\"");
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

// fixed-point decimal rendering, display only
inline std::string decimal_string(const Rational& q, int digits = 12) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = q * scale;
    Int n;
    // round half away from zero
    if (sgn(scaled) >= 0)
        n = floor_rational(scaled + Rational(1, 2));
    else
        n = ceil_rational(scaled - Rational(1, 2));
    bool neg = n < 0;
    Int a = neg ? Int(-n) : n;
    std::string ds = a.get_str();
    if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    // trim trailing zeros but keep one digit after the point
    size_t last = ds.find_last_not_of('0');
    if (ds[last] == '.') ++last;
    ds.erase(last + 1);
    return (neg ? "-" : "") + ds;
}

} // namespace wordalg
