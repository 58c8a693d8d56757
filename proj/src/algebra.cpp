#include "kfg/algebra.hpp"

namespace kfg {

bool Algebra::same_as(const Algebra& other) const {
    if (this == &other) return true;
    return pointwise_equal(F_, other.F_);
}

Multivector Multivector::blade(AlgebraPtr alg, Mask x, Scalar c) {
    if (x >= alg->dim()) throw error("blade mask out of range for algebra");
    Multivector m(std::move(alg));
    m.add_term(x, c);
    return m;
}

Multivector Multivector::scalar(AlgebraPtr alg, Scalar c) {
    return blade(std::move(alg), 0, std::move(c));
}

Scalar Multivector::coeff(Mask x) const {
    auto it = c_.find(x);
    return it == c_.end() ? Scalar::zero() : it->second;
}

std::optional<Scalar> Multivector::as_scalar() const {
    if (c_.empty()) return Scalar::zero();
    if (c_.size() == 1 && c_.begin()->first == 0) return c_.begin()->second;
    return std::nullopt;
}

void Multivector::add_term(Mask x, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void Multivector::check_same(const Multivector& b) const {
    if (alg_ == b.alg_) return;
    if (!alg_->same_as(*b.alg_))
        throw error("multivectors belong to different algebras");
}

Multivector Multivector::operator-() const {
    Multivector out(alg_);
    for (const auto& [x, c] : c_) out.c_.emplace(x, -c);
    return out;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out = a;
    for (const auto& [x, c] : b.c_) out.add_term(x, c);
    return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
    return a + (-b);
}

Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    const Cochain& F = a.alg_->cochain();
    Multivector out(a.alg_);
    for (const auto& [x, cx] : a.c_)
        for (const auto& [y, cy] : b.c_)
            out.add_term(x ^ y, cx * cy * F(x, y));
    return out;
}

Multivector operator*(const Scalar& c, const Multivector& a) {
    Multivector out(a.alg_);
    if (c.is_zero()) return out;
    for (const auto& [x, cx] : a.c_) out.add_term(x, c * cx);
    return out;
}

std::string blade_str(Mask x) {
    if (x == 0) return "1";
    std::string s;
    Mask t = x;
    while (t) {
        int i = std::countr_zero(t);
        t &= t - 1;
        if (!s.empty()) s += "*";
        s += "e" + std::to_string(i + 1);
    }
    return s;
}

std::string Multivector::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [x, c] : c_) {
        Scalar coeff = c;
        if (!first) {
            // pull a leading minus out of purely negative coefficients
            bool neg = (coeff.im() == 0 && coeff.re() < 0) ||
                       (coeff.re() == 0 && coeff.im() < 0);
            out += neg ? " - " : " + ";
            if (neg) coeff = -coeff;
        }
        first = false;
        std::string cs = coeff.str();
        if (x == 0) {
            out += coeff.re() != 0 && coeff.im() != 0 ? "(" + cs + ")" : cs;
            continue;
        }
        if (coeff.is_one()) {
            out += blade_str(x);
        } else if (coeff == Scalar(-1)) {
            out += "-" + blade_str(x);
        } else {
            bool needs_paren = coeff.re() != 0 && coeff.im() != 0;
            out += (needs_paren ? "(" + cs + ")" : cs) + "*" + blade_str(x);
        }
    }
    return out;
}

}  // namespace kfg
