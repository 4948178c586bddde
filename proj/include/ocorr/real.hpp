#ifndef OCORR_REAL_HPP
#define OCORR_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "ocorr/rational.hpp"

namespace ocorr {

/// Minimal RAII wrapper around mpfr_t, rounding to nearest. Each value
/// carries its own precision; binary ops compute at the max of the two.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Real(double v, mpfr_prec_t prec) : Real(prec) { mpfr_set_d(x_, v, MPFR_RNDN); }
    Real(long v, mpfr_prec_t prec) : Real(prec) { mpfr_set_si(x_, v, MPFR_RNDN); }
    Real(const Rational& q, mpfr_prec_t prec) : Real(prec) {
        mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) : Real(mpfr_get_prec(o.x_)) { mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

    static Real exp(const Real& a) {
        Real r(a.prec());
        mpfr_exp(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    static Real pow_ui(const Real& a, unsigned long e) {
        Real r(a.prec());
        mpfr_pow_ui(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }
    static Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(x_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Fixed-point decimal string with `digits` fractional digits.
    std::string str(int digits) const {
        char fmt[32];
        std::snprintf(fmt, sizeof fmt, "%%.%dRf", digits < 0 ? 0 : digits);
        char* out = nullptr;
        mpfr_asprintf(&out, fmt, x_);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

private:
    mpfr_t x_;
};

}  // namespace ocorr

#endif
