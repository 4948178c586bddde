#include "ocorr/poly.hpp"

#include <json.hpp>

#include "ocorr/error.hpp"

namespace ocorr {

namespace {
const Rational kZero{0};
}

PolyP PolyP::constant(const Rational& v) { return PolyP(std::vector<Rational>{v}); }

PolyP PolyP::linear(const Rational& a, const Rational& b) {
    return PolyP(std::vector<Rational>{a, b});
}

const Rational& PolyP::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return kZero;
    return c_[i];
}

void PolyP::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

PolyP PolyP::operator+(const PolyP& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return PolyP(std::move(r));
}

PolyP PolyP::operator-(const PolyP& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] -= o.c_[i];
    }
    return PolyP(std::move(r));
}

PolyP PolyP::operator*(const PolyP& o) const {
    if (is_zero() || o.is_zero()) return PolyP();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return PolyP(std::move(r));
}

PolyP PolyP::scaled(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return PolyP(std::move(r));
}

Rational PolyP::eval(const Rational& x) const {
    Rational acc{0};
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Rational PolyP::derivative_at_zero(int m) const {
    if (m < 0) throw DomainError("derivative_at_zero: negative order");
    if (m >= (int)c_.size()) return Rational(0);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), (unsigned long)m);
    return c_[m] * Rational(fact);
}

std::string PolyP::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : c_) arr.push_back(to_fraction_string(c));
    return arr.dump();
}

PolyP PolyP::from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw DomainError("PolyP::from_json: expected array");
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& item : arr) c.push_back(parse_rational(item.get<std::string>()));
    return PolyP(std::move(c));
}

}  // namespace ocorr
