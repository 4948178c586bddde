#ifndef OCORR_POLY_HPP
#define OCORR_POLY_HPP

#include <string>
#include <vector>

#include "ocorr/rational.hpp"

namespace ocorr {

/// Dense polynomial in the edge probability p, exact rational
/// coefficients, index = power of p. Trailing zeros are trimmed; the
/// zero polynomial has an empty coefficient vector.
class PolyP {
public:
    PolyP() = default;
    explicit PolyP(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyP constant(const Rational& v);
    /// a + b p
    static PolyP linear(const Rational& a, const Rational& b);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return (int)c_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// Coefficient of p^i (0 beyond the stored degree).
    const Rational& coeff(int i) const;

    PolyP operator+(const PolyP& o) const;
    PolyP operator-(const PolyP& o) const;
    PolyP operator*(const PolyP& o) const;
    PolyP scaled(const Rational& s) const;
    PolyP operator-() const { return scaled(Rational(-1)); }

    bool operator==(const PolyP& o) const { return c_ == o.c_; }

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    /// m-th derivative at 0, i.e. m! * coeff(m); 0 when m > degree.
    Rational derivative_at_zero(int m) const;

    /// JSON array of "a/b" strings, index = power of p.
    std::string to_json() const;
    static PolyP from_json(const std::string& text);

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace ocorr

#endif
