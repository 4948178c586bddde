#ifndef OCORR_RINGS_HPP
#define OCORR_RINGS_HPP

#include <map>
#include <vector>

#include "ocorr/error.hpp"
#include "ocorr/rational.hpp"
#include "ocorr/real.hpp"
#include "ocorr/wpoly.hpp"

namespace ocorr {

// The cluster recursions are written once, over an abstract coefficient
// ring. Three instantiations:
//
//   PolyRing      -- full symbolic polynomials in p (WPoly),
//   ScaledIntRing -- exact values at a fixed rational p = a/b, stored as
//                    integers v with an implicit denominator (2b)^e where
//                    e is the p-degree bound of the quantity. The degree
//                    bookkeeping of the recursions is exact, so additions
//                    never need alignment; the few places with slack get
//                    an explicit pad((2b)^e) factor (which PolyRing and
//                    FloatRing treat as 1).
//   FloatRing     -- high-precision floating point (MPFR).
//
// Power caches must be reserved before use; afterwards all lookups are
// const and thread-safe.

class PolyRing {
public:
    using Value = WPoly;

    Value zero() const { return WPoly(); }
    Value one() const { return WPoly::one(); }

    void reserve(long ymax, long qmax, const std::vector<long>&) {
        grow(ypow_, WPoly::y(), ymax);
        grow(qpow_, WPoly::q(), qmax);
    }
    const Value& ypow(long e) const { return ypow_.at(e); }
    const Value& qpow(long e) const { return qpow_.at(e); }
    const Value& pad(long) const { return one_; }
    bool trivial_pad() const { return true; }

    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value mul_int(const Value& a, const Int& c) const { return a.scaled(c); }
    void add_assign(Value& a, const Value& b) const { a.add_assign(b); }
    void sub_assign(Value& a, const Value& b) const { a.sub_assign(b); }
    void div_exact_ui(Value& a, unsigned long c) const;

private:
    static void grow(std::vector<WPoly>& cache, const WPoly& base, long emax) {
        if (cache.empty()) cache.push_back(WPoly::one());
        while ((long)cache.size() <= emax) cache.push_back(cache.back() * base);
    }
    std::vector<WPoly> ypow_, qpow_;
    WPoly one_ = WPoly::one();
};

inline void PolyRing::div_exact_ui(WPoly& a, unsigned long c) const {
    std::vector<Int> z = a.coeffs();
    for (auto& v : z) {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), c);
        if (sgn(r) != 0) throw ConsistencyError("PolyRing: inexact coefficient division");
        v = q;
    }
    a = WPoly(std::move(z));
}

class ScaledIntRing {
public:
    using Value = Int;

    explicit ScaledIntRing(const Rational& p) : p_(p) {
        if (sgn(p) < 0 || p > 1) throw DomainError("ScaledIntRing: p must be in [0,1]");
        p_.canonicalize();
        const Int &a = p_.get_num(), &b = p_.get_den();
        beta_ = 2 * b;
        ynum_ = 2 * b - a;
        qnum_ = 2 * b - 2 * a;
    }

    const Rational& p() const { return p_; }
    const Int& beta() const { return beta_; }

    Value zero() const { return Int(0); }
    Value one() const { return Int(1); }

    void reserve(long ymax, long qmax, const std::vector<long>& pad_exps) {
        grow(ypow_, ynum_, ymax);
        grow(qpow_, qnum_, qmax);
        for (long e : pad_exps)
            if (!pad_.count(e)) {
                Int v;
                mpz_pow_ui(v.get_mpz_t(), beta_.get_mpz_t(), (unsigned long)e);
                pad_.emplace(e, std::move(v));
            }
    }
    const Value& ypow(long e) const { return ypow_.at(e); }
    const Value& qpow(long e) const { return qpow_.at(e); }
    const Value& pad(long e) const { return pad_.at(e); }
    bool trivial_pad() const { return false; }

    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value mul_int(const Value& a, const Int& c) const { return a * c; }
    void add_assign(Value& a, const Value& b) const { a += b; }
    void sub_assign(Value& a, const Value& b) const { a -= b; }
    void div_exact_ui(Value& a, unsigned long c) const {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), c);
        if (sgn(r) != 0) throw ConsistencyError("ScaledIntRing: inexact division");
        a = q;
    }

    /// v / (2b)^scale_exp as a canonical rational.
    Rational to_rational(const Value& v, long scale_exp) const {
        Int den;
        mpz_pow_ui(den.get_mpz_t(), beta_.get_mpz_t(), (unsigned long)scale_exp);
        Rational r(v, den);
        r.canonicalize();
        return r;
    }

private:
    static void grow(std::vector<Int>& cache, const Int& base, long emax) {
        if (cache.empty()) cache.push_back(Int(1));
        while ((long)cache.size() <= emax) cache.push_back(cache.back() * base);
    }
    Rational p_;
    Int beta_, ynum_, qnum_;
    std::vector<Int> ypow_, qpow_;
    std::map<long, Int> pad_;
};

class FloatRing {
public:
    using Value = Real;

    FloatRing(const Rational& p, mpfr_prec_t prec) : prec_(prec), y_(prec), q_(prec) {
        if (sgn(p) < 0 || p > 1) throw DomainError("FloatRing: p must be in [0,1]");
        Real pr(p, prec);
        y_ = Real(1L, prec) - pr / Real(2L, prec);
        q_ = Real(1L, prec) - pr;
    }

    mpfr_prec_t prec() const { return prec_; }

    Value zero() const { return Real(0.0, prec_); }
    Value one() const { return Real(1.0, prec_); }

    void reserve(long ymax, long qmax, const std::vector<long>&) {
        grow(ypow_, y_, ymax);
        grow(qpow_, q_, qmax);
    }
    const Value& ypow(long e) const { return ypow_.at(e); }
    const Value& qpow(long e) const { return qpow_.at(e); }
    const Value& pad(long) const { return ypow_.at(0); }
    bool trivial_pad() const { return true; }

    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value mul_int(const Value& a, const Int& c) const {
        Real r(a.prec());
        mpfr_mul_z(r.raw(), a.raw(), c.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    void add_assign(Value& a, const Value& b) const { a += b; }
    void sub_assign(Value& a, const Value& b) const { a -= b; }
    void div_exact_ui(Value& a, unsigned long c) const {
        mpfr_div_ui(a.raw(), a.raw(), c, MPFR_RNDN);
    }

private:
    void grow(std::vector<Real>& cache, const Real& base, long emax) {
        if (cache.empty()) cache.push_back(one());
        while ((long)cache.size() <= emax) cache.push_back(cache.back() * base);
    }
    mpfr_prec_t prec_;
    Real y_, q_;
    std::vector<Real> ypow_, qpow_;
};

}  // namespace ocorr

#endif
