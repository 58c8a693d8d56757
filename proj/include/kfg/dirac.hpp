#pragma once

#include <array>
#include <map>

#include "kfg/clifford.hpp"

namespace kfg {

/// Exponents of a monomial in x1..x4.
struct Monomial {
    std::array<unsigned, 4> e{0, 0, 0, 0};
    auto operator<=>(const Monomial&) const = default;
    unsigned degree() const { return e[0] + e[1] + e[2] + e[3]; }
};

/// A polynomial in x1..x4 with Q(i) coefficients.
class Poly {
public:
    static Poly zero() { return {}; }
    static Poly term(Monomial m, Scalar c);

    const std::map<Monomial, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(Monomial m, const Scalar& c);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    /// Formal partial derivative in direction a (1..4).
    Poly d(int a) const;
    /// Coefficientwise complex conjugation.
    Poly conj() const;

    std::string str() const;

private:
    std::map<Monomial, Scalar> t_;
};

/// The quaternion algebra C(0,2) shared by all spinors.
const CliffordPtr& quaternion_algebra();

/// A quaternion-valued polynomial: four component polynomials indexed by
/// the C(0,2) blades 1, e1, e2, e3 = e1 e2 (masks 0..3).
class PolySpinor {
public:
    PolySpinor() = default;

    static PolySpinor component(int blade_mask, Poly p);

    const Poly& comp(int blade_mask) const { return c_[size_t(blade_mask)]; }
    Poly& comp(int blade_mask) { return c_[size_t(blade_mask)]; }
    bool is_zero() const;

    friend PolySpinor operator+(const PolySpinor& a, const PolySpinor& b);
    friend PolySpinor operator-(const PolySpinor& a, const PolySpinor& b);
    friend PolySpinor operator*(const Scalar& s, const PolySpinor& a);
    friend bool operator==(const PolySpinor& a, const PolySpinor& b);

    /// Left quaternion multiplication by the blade e_b.
    PolySpinor left_mul_blade(Mask b) const;

    std::string str() const;

private:
    std::array<Poly, 4> c_;
};

PolySpinor partial_derivative(const PolySpinor& psi, int a);

/// The Dirac operator in the twisted form
/// e1 (d1 + i d3 (-1)^{|psi|_1}) psi + e2 (d2 + i d4 (-1)^{|psi|_2}) psi,
/// applied per homogeneous component.
PolySpinor dirac_apply(const PolySpinor& psi);

/// The four-component form with nabla_1 = d1 + i d3, nabla_2 = d2 + i d4.
PolySpinor dirac_component_form(const PolySpinor& psi);

/// The divergence / gradient / curl form with nabla_3 = 0 and the third
/// vector component conjugated.
PolySpinor dirac_curl_form(const PolySpinor& psi);

PolySpinor laplacian(const PolySpinor& psi);

}  // namespace kfg
