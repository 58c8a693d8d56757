#pragma once

#include "kfg/algebra.hpp"

namespace kfg {

/// A twisted algebra whose cochain is the Clifford closed form.
/// Relations e_i^2 = q_i and e_i e_j = -e_j e_i follow from the cocycle.
class CliffordAlgebra : public Algebra {
public:
    explicit CliffordAlgebra(Signature sig)
        : Algebra(Cochain::clifford(sig)), sig_(std::move(sig)) {}

    const Signature& signature() const { return sig_; }
    const Scalar& q(int i) const { return sig_.q.at(i); }
    /// Mask of the top blade e_(1,...,1).
    Mask gamma_mask() const { return dim() - 1; }

private:
    Signature sig_;
};

using CliffordPtr = std::shared_ptr<const CliffordAlgebra>;

inline CliffordPtr make_clifford(Signature sig) {
    return std::make_shared<CliffordAlgebra>(std::move(sig));
}
inline CliffordPtr make_clifford(const std::string& sig) {
    return make_clifford(Signature::parse(sig));
}

/// theta(x) = (-1)^{rho(x)(rho(x)-1)/2}, the order-reversal sign.
int theta_sign(Mask x);

/// Theta(e_x) = theta(x) e_x, extended linearly; an anti-involution.
Multivector theta_involution(const Multivector& a);

/// sigma(e_x) = (-1)^{rho(x)} e_x; the grading automorphism.
Multivector sigma_automorphism(const Multivector& a);

/// gamma^2 as a scalar: F((1..1),(1..1)) = (-1)^{n(n-1)/2} prod q_i.
Scalar top_square(const CliffordAlgebra& alg);

/// e_x^{-1} = e_x / F(x,x).
Multivector basis_inverse(const CliffordPtr& alg, Mask x);

/// lambda(e_x) = (-1)^{rho(x)} prod_i q_i^{x_i}.
Scalar lambda_norm(const CliffordAlgebra& alg, Mask x);

/// ad_{e_x}(a) = sigma(e_x) . a . e_x^{-1}, in closed diagonal form
/// ad_{e_x}(e_y) = (-1)^{rho(x)(rho(y)+1) + x.y} e_y.
Multivector adjoint_action(Mask x, const Multivector& a);

/// Sign s with e_x . e_y = s e_y . e_x. Evaluated through the braiding.
int commute_sign(const Algebra& alg, Mask x, Mask y);

}  // namespace kfg
