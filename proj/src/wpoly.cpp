#include "ocorr/wpoly.hpp"

#include <algorithm>

#include "ocorr/error.hpp"

namespace ocorr {

WPoly WPoly::constant(Int v) {
    WPoly r;
    r.z_.push_back(std::move(v));
    r.trim();
    return r;
}

WPoly WPoly::y() { return WPoly(std::vector<Int>{Int(1), Int(-1)}); }
WPoly WPoly::q() { return WPoly(std::vector<Int>{Int(1), Int(-2)}); }

void WPoly::trim() {
    while (!z_.empty() && sgn(z_.back()) == 0) z_.pop_back();
}

WPoly WPoly::operator+(const WPoly& o) const {
    WPoly r(*this);
    r.add_assign(o);
    return r;
}

WPoly WPoly::operator-(const WPoly& o) const {
    WPoly r(*this);
    r.sub_assign(o);
    return r;
}

void WPoly::add_assign(const WPoly& o) {
    if (o.z_.size() > z_.size()) z_.resize(o.z_.size());
    for (size_t i = 0; i < o.z_.size(); ++i) z_[i] += o.z_[i];
    trim();
}

void WPoly::sub_assign(const WPoly& o) {
    if (o.z_.size() > z_.size()) z_.resize(o.z_.size());
    for (size_t i = 0; i < o.z_.size(); ++i) z_[i] -= o.z_[i];
    trim();
}

WPoly WPoly::scaled(const Int& s) const {
    if (sgn(s) == 0) return WPoly();
    WPoly r(*this);
    for (auto& c : r.z_) c *= s;
    return r;
}

namespace {

size_t max_coeff_bits(const std::vector<Int>& z) {
    size_t b = 1;
    for (const auto& c : z)
        if (sgn(c) != 0) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
    return b;
}

size_t ceil_log2(size_t v) {
    size_t b = 0;
    while ((size_t(1) << b) < v) ++b;
    return b;
}

// Schoolbook product, used for small operands.
std::vector<Int> mul_schoolbook(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

// Packs signed coefficients into one big integer at limb-aligned digit
// boundaries (positive and negative parts separately), so that one GMP
// multiplication computes the whole coefficient convolution.
Int pack(const std::vector<Int>& z, size_t k_limbs) {
    const size_t total = z.size() * k_limbs;
    std::vector<mp_limb_t> pos(total, 0), neg(total, 0);
    bool any_neg = false, any_pos = false;
    for (size_t i = 0; i < z.size(); ++i) {
        int s = sgn(z[i]);
        if (s == 0) continue;
        const mpz_srcptr v = z[i].get_mpz_t();
        size_t n = mpz_size(v);
        const mp_limb_t* limbs = mpz_limbs_read(v);
        mp_limb_t* dst = (s > 0 ? pos.data() : neg.data()) + i * k_limbs;
        std::copy(limbs, limbs + n, dst);
        (s > 0 ? any_pos : any_neg) = true;
    }
    Int p, n;
    if (any_pos) mpz_import(p.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (any_neg) mpz_import(n.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, neg.data());
    return p - n;
}

std::vector<Int> mul_kronecker(const std::vector<Int>& a, const std::vector<Int>& b) {
    const size_t rlen = a.size() + b.size() - 1;
    const size_t bits =
        max_coeff_bits(a) + max_coeff_bits(b) + ceil_log2(std::min(a.size(), b.size())) + 2;
    const size_t k_limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const size_t kbits = k_limbs * GMP_NUMB_BITS;

    Int v = pack(a, k_limbs) * pack(b, k_limbs);

    // Bias each base-2^kbits digit by half so all digits are nonnegative,
    // then read them back limb-aligned. |true digit| < 2^(kbits-1), so the
    // biased digits never carry.
    std::vector<mp_limb_t> offs(rlen * k_limbs, 0);
    for (size_t i = 0; i < rlen; ++i)
        offs[i * k_limbs + (k_limbs - 1)] = mp_limb_t(1) << (GMP_NUMB_BITS - 1);
    Int offset;
    mpz_import(offset.get_mpz_t(), offs.size(), -1, sizeof(mp_limb_t), 0, 0, offs.data());
    v += offset;
    if (sgn(v) < 0) throw ConsistencyError("kronecker: bias underflow");

    const size_t vn = mpz_size(v.get_mpz_t());
    const mp_limb_t* vl = mpz_limbs_read(v.get_mpz_t());
    Int half;
    mpz_setbit(half.get_mpz_t(), kbits - 1);

    std::vector<Int> r(rlen);
    std::vector<mp_limb_t> window(k_limbs);
    for (size_t i = 0; i < rlen; ++i) {
        for (size_t j = 0; j < k_limbs; ++j) {
            size_t idx = i * k_limbs + j;
            window[j] = idx < vn ? vl[idx] : 0;
        }
        Int u;
        mpz_import(u.get_mpz_t(), k_limbs, -1, sizeof(mp_limb_t), 0, 0, window.data());
        r[i] = u - half;
    }
    return r;
}

}  // namespace

WPoly WPoly::operator*(const WPoly& o) const {
    if (is_zero() || o.is_zero()) return WPoly();
    if (z_.size() * o.z_.size() <= 256) return WPoly(mul_schoolbook(z_, o.z_));
    return WPoly(mul_kronecker(z_, o.z_));
}

Int WPoly::eval_scaled(const Int& a, const Int& two_b) const {
    // sum z_i a^i (2b)^(d-i), computed by Horner with a running power.
    if (is_zero()) return Int(0);
    Int acc = z_.back(), pw(1);
    for (size_t i = z_.size() - 1; i-- > 0;) {
        pw *= two_b;
        acc *= a;
        mpz_addmul(acc.get_mpz_t(), z_[i].get_mpz_t(), pw.get_mpz_t());
    }
    return acc;
}

int WPoly::sign_at(const Rational& p) const {
    Int two_b = 2 * p.get_den();
    return sgn(eval_scaled(p.get_num(), two_b));
}

Rational WPoly::eval(const Rational& p) const {
    if (is_zero()) return Rational(0);
    Int two_b = 2 * p.get_den();
    Int num = eval_scaled(p.get_num(), two_b);
    Int den;
    mpz_pow_ui(den.get_mpz_t(), two_b.get_mpz_t(), (unsigned long)degree());
    Rational r(num, den);
    r.canonicalize();
    return r;
}

PolyP WPoly::to_polyp() const {
    std::vector<Rational> c(z_.size());
    Int pw2(1);
    for (size_t i = 0; i < z_.size(); ++i) {
        c[i] = Rational(z_[i], pw2);
        c[i].canonicalize();
        pw2 <<= 1;
    }
    return PolyP(std::move(c));
}

WPoly WPoly::from_polyp(const PolyP& f) {
    std::vector<Int> z(f.coeffs().size());
    Int pw2(1);
    for (size_t i = 0; i < z.size(); ++i) {
        Rational c = f.coeffs()[i] * Rational(pw2);
        if (c.get_den() != 1)
            throw DomainError("WPoly::from_polyp: coefficient of p^" + std::to_string(i) +
                              " is not dyadic of slope 2^-i");
        z[i] = c.get_num();
        pw2 <<= 1;
    }
    return WPoly(std::move(z));
}

}  // namespace ocorr
