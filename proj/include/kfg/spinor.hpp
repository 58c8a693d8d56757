#pragma once

#include "kfg/clifford.hpp"
#include "kfg/matrix.hpp"
#include "kfg/process.hpp"

namespace kfg {

/// (e_x (x) e_y).e_z = F(x,y) F(x+y,z) (-1)^{y.z} i^{rho(y)} e_{x+y+z},
/// the left-right action of the doubled Clifford algebra on the blade
/// space of alg.
Multivector lr_action(Mask x, Mask y, Mask z, const CliffordPtr& alg);

/// Matrix of the action of e_x (x) e_y; entry (w, z) is the coefficient
/// of e_w in the image of e_z.
Mat lr_matrix(Mask x, Mask y, const CliffordPtr& alg);

/// The 2n generator matrices: the first n are e_i (x) 1, the next n are
/// 1 (x) e_i. Together they satisfy the C(V+V, q+q) relations.
std::vector<Mat> generator_matrices(const CliffordPtr& alg);

/// Verifies that x,y -> lr_matrix is injective on the 4^n basis pairs
/// (exact rank); n <= 3.
bool full_rep_faithfulness(const CliffordPtr& alg);

/// Action of generator a (1-based, a <= 2n) in the exterior-algebra
/// model: wedge + interior for a <= n, i (wedge - interior) for a > n.
Multivector exterior_model_action(int a, const Multivector& w);

/// Matrix of the exterior-model generator action.
Mat exterior_model_matrix(int a, const CliffordPtr& alg);

struct GradingOperator {
    Mat matrix;     // action of top (x) top
    Scalar lambda;  // i^n (-1)^{n(n-1)/2} prod q_i
};

/// The grading operator: diagonal with entries lambda (-1)^{rho(z)}.
GradingOperator grading_operator(const CliffordPtr& alg);

/// The odd extension M_{2n+1} = lambda * diag((-1)^{rho(z)}) with
/// lambda in {1, i}, lambda^2 = q in {1, -1}. Verifies M^2 = q id and
/// anticommutation with the 2n generator matrices.
Mat odd_extend(const std::vector<Mat>& gens, const CliffordPtr& alg,
               const Scalar& q);

/// The full spinor rep (2n generators, or 2n+1 with odd_q) packaged for
/// relation/commutant checks.
Rep spinor_rep(const CliffordPtr& alg, std::optional<Scalar> odd_q = std::nullopt);

}  // namespace kfg
