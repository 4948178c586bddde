#ifndef OCORR_WPOLY_HPP
#define OCORR_WPOLY_HPP

#include <vector>

#include "ocorr/poly.hpp"
#include "ocorr/rational.hpp"

namespace ocorr {

/// Integer-coefficient view of the probability polynomials: the
/// coefficient of p^i is stored as the integer z_i = c_i * 2^i, i.e.
/// the polynomial is rewritten in w = p/2. Every polynomial produced
/// by the cluster recursions has dyadic coefficients of exactly this
/// shape (y = 1 - w, q = 1 - 2w, p/2 = w), so all arithmetic stays in
/// Z[w] and no gcd work is ever done. Conversion back to PolyP divides
/// coefficient i by 2^i.
class WPoly {
public:
    WPoly() = default;
    explicit WPoly(std::vector<Int> z) : z_(std::move(z)) { trim(); }
    static WPoly constant(Int v);
    static WPoly one() { return constant(Int(1)); }
    /// 1 - w  (the polynomial y = 1 - p/2)
    static WPoly y();
    /// 1 - 2w (the polynomial q = 1 - p)
    static WPoly q();

    bool is_zero() const { return z_.empty(); }
    int degree() const { return (int)z_.size() - 1; }
    const std::vector<Int>& coeffs() const { return z_; }

    WPoly operator+(const WPoly& o) const;
    WPoly operator-(const WPoly& o) const;
    WPoly operator*(const WPoly& o) const;
    WPoly scaled(const Int& s) const;

    void add_assign(const WPoly& o);
    void sub_assign(const WPoly& o);

    bool operator==(const WPoly& o) const { return z_ == o.z_; }

    /// Exact value at p = a/b (a/b canonical): returns the pair
    /// (numerator, denominator) implicitly as numerator / (2b)^degree;
    /// only the integer numerator is computed.
    Int eval_scaled(const Int& a, const Int& two_b) const;
    /// Sign of the value at p = a/b.
    int sign_at(const Rational& p) const;
    Rational eval(const Rational& p) const;

    PolyP to_polyp() const;
    /// Requires every c_i * 2^i to be an integer; throws otherwise.
    static WPoly from_polyp(const PolyP& f);

private:
    void trim();
    std::vector<Int> z_;
};

}  // namespace ocorr

#endif
