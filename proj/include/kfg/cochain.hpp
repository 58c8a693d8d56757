#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kfg/group.hpp"
#include "kfg/scalar.hpp"

namespace kfg {

/// The diagonal values q_i = q(e_i) of a quadratic form in an
/// orthogonal basis. All entries must be nonzero.
struct Signature {
    std::vector<Scalar> q;

    Signature() = default;
    explicit Signature(std::vector<Scalar> values);

    int n() const { return static_cast<int>(q.size()); }
    bool all_pm1() const;
    /// Bitmask of the entries equal to -1 (requires all_pm1).
    Mask neg_mask() const;

    Signature negated() const;
    /// Concatenation (q, p) for V + W.
    friend Signature concat(const Signature& a, const Signature& b);

    /// "+-+" shorthand or comma-separated scalar list ("1,-1,1/2").
    static Signature parse(const std::string& src);
    std::string str() const;

    bool operator==(const Signature&) const = default;
};

/// A normalized nowhere-zero 2-cochain F on Z_2^n.
///
/// Three storage kinds: the Clifford closed form
///   F(x,y) = (-1)^{sum_{j<i} x_i y_j} prod_i q_i^{x_i y_i},
/// a Z_2-valued exponent table F(x,y) = (-1)^{f(x,y)}, and a dense
/// table of arbitrary nonzero scalars. Equality F(0,y)=F(x,0)=1 is
/// enforced at construction.
class Cochain {
public:
    enum class Kind { Clifford, Sign, Table };

    static Cochain clifford(Signature sig);
    /// f is a dense 2^n x 2^n row-major array of bits.
    static Cochain sign_form(int n, std::vector<std::uint8_t> f);
    static Cochain table(int n, std::vector<Scalar> values);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    Mask size() const { return Mask{1} << n_; }

    Scalar operator()(Mask x, Mask y) const;

    /// True when every value of F is +1 or -1.
    bool pm1_valued() const;
    /// The exponent bit of F(x,y) = (-1)^b; only valid when pm1_valued().
    int sign_bit(Mask x, Mask y) const;

    const Signature& signature() const;  // Clifford kind only
    const std::vector<std::uint8_t>& sign_table() const;  // Sign kind only

    /// Pointwise equality of values (kinds may differ).
    friend bool pointwise_equal(const Cochain& a, const Cochain& b);

private:
    Cochain(Kind k, int n) : kind_(k), n_(n) {}
    void check_args(Mask x, Mask y) const;

    Kind kind_;
    int n_;
    Signature sig_;                    // Clifford
    Mask neg_mask_ = 0;                // Clifford fast path when sig is +-1
    bool sig_pm1_ = false;
    std::vector<std::uint8_t> bits_;   // Sign
    std::vector<Scalar> values_;       // Table
    bool table_pm1_ = false;
};

/// dF(x,y,z) = F(x,y) F(x+y,z) / (F(y,z) F(x,y+z)); the associator.
Scalar coboundary3(const Cochain& F, Mask x, Mask y, Mask z);

/// Exponent-bit version of coboundary3 for +-1-valued cochains.
int coboundary3_sign(const Cochain& F, Mask x, Mask y, Mask z);

/// R(x,y) = F(x,y) / F(y,x).
Scalar braiding(const Cochain& F, Mask x, Mask y);

/// Exhaustive check dF == 1 over all 8^n triples.
/// Throws kfg::error for n > 12 ("too large for exhaustive check").
bool is_cocycle(const Cochain& F);

/// ds(x,y) = s(x) s(y) / s(x+y) for a pointwise-given s with s(0)=1.
/// s is a dense vector of 2^n nowhere-zero scalars.
Scalar character_coboundary(const std::vector<Scalar>& s, Mask x, Mask y);

}  // namespace kfg
