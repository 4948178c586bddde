#ifndef OCORR_RATIONAL_HPP
#define OCORR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "ocorr/error.hpp"

namespace ocorr {

// Exact scalars. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "a/b", "a", or a plain decimal string like "0.25".
inline Rational parse_rational(const std::string& s) {
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || frac_len == 0) throw DomainError("parse_rational: bad decimal '" + s + "'");
        Int num(digits, 10);
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("parse_rational: cannot parse '" + s + "'");
    q.canonicalize();
    if (sgn(q.get_den()) <= 0) throw DomainError("parse_rational: nonpositive denominator in '" + s + "'");
    return q;
}

/// "a/b" when b != 1, otherwise just "a".
inline std::string to_fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Fixed-point decimal with `digits` fractional digits, rounded half to even.
inline std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 0) digits = 0;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int num = q.get_num() * scale;
    const Int& den = q.get_den();
    bool neg = sgn(num) < 0;
    Int a = ::abs(num), r, qq;
    mpz_fdiv_qr(qq.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), den.get_mpz_t());
    Int twice_r = 2 * r;
    int cmp = ::cmp(twice_r, den);
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(qq.get_mpz_t())))
        qq += 1;
    std::string s = qq.get_str();
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (neg && qq != 0) s.insert(0, "-");
    return s;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// q^e for e >= 0.
inline Rational pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;  // powers of a canonical fraction stay canonical
}

inline Rational abs(const Rational& q) { return ::abs(q); }

}  // namespace ocorr

#endif
