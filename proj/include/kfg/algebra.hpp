#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "kfg/cochain.hpp"

namespace kfg {

/// The twisted group algebra k_F Z_2^n: basis blades e_x indexed by
/// masks, product e_x . e_y = F(x,y) e_{x^y}. Not required to be
/// associative; the flag reports whether F is a cocycle (cached, checked
/// exhaustively on first query).
class Algebra {
public:
    explicit Algebra(Cochain F) : F_(std::move(F)) {}
    virtual ~Algebra() = default;

    int n() const { return F_.n(); }
    Mask dim() const { return F_.size(); }
    const Cochain& cochain() const { return F_; }

    bool associative() const {
        if (!associative_) associative_ = is_cocycle(F_);
        return *associative_;
    }

    /// Two algebras are compatible when their cochains agree pointwise.
    bool same_as(const Algebra& other) const;

private:
    Cochain F_;
    mutable std::optional<bool> associative_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of a twisted algebra: a finite blade -> coefficient map.
/// Zero coefficients are never stored; the map is ordered by mask so
/// printing and iteration are deterministic.
class Multivector {
public:
    explicit Multivector(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static Multivector zero(AlgebraPtr alg) { return Multivector(std::move(alg)); }
    static Multivector blade(AlgebraPtr alg, Mask x, Scalar c = Scalar::one());
    static Multivector scalar(AlgebraPtr alg, Scalar c);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Mask, Scalar>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    Scalar coeff(Mask x) const;
    /// The scalar part if the element is a multiple of 1; otherwise nullopt.
    std::optional<Scalar> as_scalar() const;

    Multivector operator-() const;
    friend Multivector operator+(const Multivector& a, const Multivector& b);
    friend Multivector operator-(const Multivector& a, const Multivector& b);
    /// The twisted product, extended bilinearly from the blades.
    friend Multivector operator*(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const Scalar& c, const Multivector& a);

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.c_ == b.c_;
    }

    /// Signed sum of "coeff*blade" terms, blades in ascending mask order;
    /// "0" for the zero element.
    std::string str() const;

    /// Adds c * e_x in place (used by builders; prunes zeros).
    void add_term(Mask x, const Scalar& c);

private:
    void check_same(const Multivector& b) const;

    AlgebraPtr alg_;
    std::map<Mask, Scalar> c_;
};

/// Blade name in CLI syntax: "1" or "e1*e3".
std::string blade_str(Mask x);

}  // namespace kfg
