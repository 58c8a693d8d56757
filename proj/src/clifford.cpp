#include "kfg/clifford.hpp"

namespace kfg {

int theta_sign(Mask x) {
    int r = rho(x);
    return (r * (r - 1) / 2) % 2 ? -1 : 1;
}

Multivector theta_involution(const Multivector& a) {
    Multivector out(a.algebra());
    for (const auto& [x, c] : a.coeffs())
        out.add_term(x, theta_sign(x) < 0 ? -c : c);
    return out;
}

Multivector sigma_automorphism(const Multivector& a) {
    Multivector out(a.algebra());
    for (const auto& [x, c] : a.coeffs())
        out.add_term(x, rho(x) & 1 ? -c : c);
    return out;
}

Scalar top_square(const CliffordAlgebra& alg) {
    Mask g = alg.gamma_mask();
    return alg.cochain()(g, g);
}

Multivector basis_inverse(const CliffordPtr& alg, Mask x) {
    Scalar fxx = alg->cochain()(x, x);
    return Multivector::blade(alg, x, fxx.inverse());
}

Scalar lambda_norm(const CliffordAlgebra& alg, Mask x) {
    Scalar v = rho(x) & 1 ? Scalar(-1) : Scalar(1);
    Mask t = x;
    while (t) {
        int i = std::countr_zero(t);
        t &= t - 1;
        v *= alg.q(i);
    }
    return v;
}

Multivector adjoint_action(Mask x, const Multivector& a) {
    Multivector out(a.algebra());
    for (const auto& [y, c] : a.coeffs()) {
        int e = rho(x) * (rho(y) + 1) + dot(x, y);
        out.add_term(y, e & 1 ? -c : c);
    }
    return out;
}

int commute_sign(const Algebra& alg, Mask x, Mask y) {
    Scalar r = braiding(alg.cochain(), x, y);
    if (r == Scalar(1)) return 1;
    if (r == Scalar(-1)) return -1;
    throw error("braiding value is not a sign");
}

}  // namespace kfg
