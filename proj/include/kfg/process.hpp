#pragma once

#include <array>
#include <memory>
#include <optional>

#include "kfg/cochain.hpp"
#include "kfg/matrix.hpp"

namespace kfg {

/// A graded quasialgebra k_F G together with the grading function s
/// driving the doubling process. Specs produced by process_once keep a
/// link to their parent so the closed associator/braiding formulas can
/// be evaluated.
struct GradedSpec {
    Cochain F;
    std::vector<Scalar> s;  // dense over Z_2^n; s[0] = 1, nowhere zero
    std::optional<std::vector<std::uint8_t>> xi;  // s(x) = (-1)^{xi(x)} when set

    std::shared_ptr<const GradedSpec> parent;
    Scalar parent_q;

    int n() const { return F.n(); }
    Mask dim() const { return F.size(); }

    bool s_pm1() const;
    /// s(x)s(y) = s(x+y) for all pairs.
    bool s_is_character() const;
    /// Character with s^2 = 1; i.e. s induces an involutive automorphism.
    bool s_involutive_character() const;

    static GradedSpec make(Cochain F, std::vector<Scalar> s);
    /// Clifford algebra with the standard grading s = (-1)^rho.
    static GradedSpec clifford(Signature sig);
};

/// One doubling step: G -> G x Z_2 (the new generator v is the new
/// most significant bit) with
///   Fb(x,y) = Fb(x,yv) = F(x,y),  Fb(xv,y) = s(y) F(x,y),
///   Fb(xv,yv) = q s(y) F(x,y),    sb(x) = s(x), sb(xv) = -s(x).
GradedSpec process_once(const GradedSpec& spec, const Scalar& q);

/// Closed-form associator of a processed spec (selects the case by the
/// v bit of the first argument; the proof-version factor s(y)s(z)/s(yz)).
Scalar closed_associator(const GradedSpec& bar, Mask x, Mask y, Mask z);

/// Closed-form braiding of a processed spec.
Scalar closed_braiding(const GradedSpec& bar, Mask x, Mask y);

/// is_cocycle of the processed cochain; requires s to be a +-1 character
/// and asserts the verdict matches is_cocycle of the parent.
bool associativity_preserved(const GradedSpec& spec, const Scalar& q);

struct AlternativityResult {
    bool alternative;
    std::optional<std::array<Mask, 3>> witness;
};

/// Checks the two alternativity identities
///   phi(x,y,z) + R(z,y) phi(x,z,y) = 1 + R(z,y)
///   phi^{-1}(x,y,z) + R(y,x) phi^{-1}(y,x,z) = 1 + R(y,x)
/// over all triples; reports a failing triple if any.
AlternativityResult alternativity_check(const GradedSpec& spec);

/// The condition that the process preserves alternativity: for every
/// triple, phi(x,y,z) = 1 or s(x) = s(y) = s(z) = 1.
bool alternativity_condition_ii(const GradedSpec& spec);

/// Iterates the process from the ground field with q_i = (-1)^{eps_i},
/// carrying the Z_2-valued exponent tables
///   fb((x,a),(y,b)) = f(x,y) + (b eps + xi(y)) a,  xib(x,a) = xi(x) + a.
/// After n steps the cochain equals the Clifford closed form and xi = rho.
GradedSpec iterate_from_field(const std::vector<int>& epsilons);

// ---- representation extension (the process on modules) ----

/// A representation given by one matrix per generator, with the expected
/// generator squares q_i. Relations: gens[i]^2 = q_i I and pairwise
/// anticommutation.
struct Rep {
    int dim = 1;
    std::vector<Mat> gens;
    std::vector<Scalar> q;

    bool relations_hold(std::string* why = nullptr) const;
};

/// Dimension of { M : M gens[i] = gens[i] M for all i } over Q(i);
/// 1 certifies irreducibility.
int commutant_dimension(const Rep& rep);

struct ExtendResult {
    Rep rep;
    bool doubled;   // true: W + W block form; false: intertwiner reused W
    Scalar q_used;  // square of the new generator actually realized
};

/// Extends a representation along one doubling step. If W is not
/// isomorphic to its sigma-conjugate (generators negated), doubles to
/// W + W with pi(v) = [[0,I],[qI,0]]. Otherwise reuses W with pi(v) the
/// normalized intertwiner, rescaled to achieve desired_q when a square
/// root of desired_q / phi^2 exists in Q(i).
ExtendResult rep_extend(const Rep& rep, const Scalar& desired_q);

}  // namespace kfg
