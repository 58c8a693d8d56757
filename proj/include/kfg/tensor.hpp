#pragma once

#include "kfg/clifford.hpp"
#include "kfg/matrix.hpp"
#include "kfg/process.hpp"

namespace kfg {

/// A finite-dimensional algebra given by dense structure constants:
/// b_i b_j = sum_k c[i][j][k] b_k, with the unit's coordinates stored
/// explicitly. Used for the ordinary (non-super) tensor products and
/// for idempotent splitting.
struct StructAlgebra {
    int dim = 0;
    std::vector<Scalar> c;     // (i * dim + j) * dim + k
    std::vector<Scalar> unit;  // coordinates of 1

    const Scalar& sc(int i, int j, int k) const {
        return c[(size_t(i) * dim + j) * dim + k];
    }
    Scalar& sc(int i, int j, int k) {
        return c[(size_t(i) * dim + j) * dim + k];
    }

    /// Product of two coordinate vectors.
    std::vector<Scalar> mul(const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) const;
};

/// Structure constants of a twisted group algebra.
StructAlgebra to_struct(const Algebra& alg);

/// Ordinary (Kronecker) tensor product A x B; basis index a * dim(B) + b.
StructAlgebra ordinary_tensor(const StructAlgebra& a, const StructAlgebra& b);

/// Super tensor product of two Clifford algebras as a twisted algebra on
/// Z_2^{n+m} (first factor in the low bits) with cochain
///   F((x,x'),(y,y')) = F_A(x,y) F_B(x',y') (-1)^{rho(x') rho(y)}.
Algebra super_tensor(const CliffordAlgebra& a, const CliffordAlgebra& b);

/// The twist F'(x,y) = F(x,y) mu^{(rho(xy)-rho(x)-rho(y))/2} with
/// mu = (-1)^{m(2m-1)} q_1...q_{2m} from an even tensor factor with +-1
/// signature. Equals F(x,y) mu^{x.y}.
Cochain periodicity_twist(const Cochain& F, const Signature& factor_sig);

/// Verifies that phi(x) = x gamma^{rho(x)} (identity on the factor) is
/// multiplicative from k_F G super-tensor C to k_{F'} G ordinary-tensor C,
/// over all basis pairs.
bool periodicity_iso_check(const CliffordAlgebra& kfg_part,
                           const CliffordAlgebra& factor);

struct AlgebraLabel {
    enum class Kind { Matrix, DoubleMatrix, Unclassified };
    Kind kind = Kind::Unclassified;
    int block = 0;  // M_block (each summand for DoubleMatrix)
    std::string detail;

    std::string str() const;
    friend bool operator==(const AlgebraLabel& a, const AlgebraLabel& b) {
        return a.kind == b.kind && a.block == b.block;
    }
};

/// Basis of the center (all elements commuting with every basis element).
std::vector<std::vector<Scalar>> center_basis(const StructAlgebra& a);

/// Wedderburn-type label for a structure algebra over Q(i):
/// center of dimension 1 -> central simplicity via the rank of the
/// left-right multiplication span; dimension 2 -> idempotent split and
/// recursion. Dimensions above 16 in the simple branch are refused.
AlgebraLabel classify(const StructAlgebra& a);

struct ClassifyReport {
    AlgebraLabel label;
    int center_dim = 0;
    std::optional<Scalar> mu;  // gamma^2 for odd n
    std::vector<std::string> checks;
};

/// Classification of a Clifford algebra with +-1 signature: even n via an
/// irreducible 2^{n/2}-dimensional representation built by the process
/// ladder (faithfulness + commutant checks), odd n by splitting along the
/// central idempotents (1 +- gamma/sqrt(mu))/2.
ClassifyReport classify(const CliffordAlgebra& alg);

struct PeriodicityReport {
    struct Item {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const;
};

/// Machine check of the periodicity identities for n <= 3: the perlemm
/// sign flip, equal classification labels on both sides of the period-2
/// isomorphisms, and H x H -> M_4.
PeriodicityReport periodicity_table_check();

}  // namespace kfg
