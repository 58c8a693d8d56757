#include "kfg/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "kfg/clifford.hpp"
#include "kfg/dirac.hpp"
#include "kfg/process.hpp"
#include "kfg/spinor.hpp"
#include "kfg/tensor.hpp"

namespace kfg::verify {
namespace {

Signature pm1_signature(int n, Mask neg) {
    std::vector<Scalar> q;
    for (int i = 0; i < n; ++i)
        q.push_back((neg >> i) & 1 ? Scalar(-1) : Scalar(1));
    return Signature(std::move(q));
}

std::string pm1_str(int n, Mask neg) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (neg >> i) & 1 ? '-' : '+';
    return s.empty() ? "(empty)" : s;
}

struct Check {
    Result r;
    explicit Check(std::string name) { r.name = std::move(name); }
    bool ok() const { return r.pass; }
    void fail(const std::string& detail) {
        if (r.pass) {
            r.pass = false;
            r.detail = detail;
        }
    }
    void require(bool cond, const std::function<std::string()>& detail) {
        if (r.pass && !cond) fail(detail());
    }
    Result done(const std::string& summary = "") {
        if (r.pass && r.detail.empty()) r.detail = summary;
        return r;
    }
};

std::string triple_str(Mask x, Mask y, Mask z) {
    std::ostringstream os;
    os << "(x=" << x << ", y=" << y << ", z=" << z << ")";
    return os.str();
}

// ---- per-algebra invariant checks, shared by the sweeps and the
// signature-scoped CLI suites ----

void check_relations(Check& c, const CliffordPtr& alg) {
    auto one = Multivector::scalar(alg, Scalar::one());
    for (int i = 0; i < alg->n() && c.ok(); ++i) {
        auto ei = Multivector::blade(alg, Mask{1} << i);
        c.require(ei * ei == alg->q(i) * one, [&] {
            return "e" + std::to_string(i + 1) + "^2 != q in " + alg->signature().str();
        });
        for (int j = i + 1; j < alg->n() && c.ok(); ++j) {
            auto ej = Multivector::blade(alg, Mask{1} << j);
            c.require((ei * ej + ej * ei).is_zero(), [&] {
                return "e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                       " fail to anticommute in " + alg->signature().str();
            });
        }
    }
}

void check_braided(Check& c, const CliffordPtr& alg, bool products) {
    const Cochain& F = alg->cochain();
    for (Mask x = 0; x < alg->dim() && c.ok(); ++x)
        for (Mask y = 0; y < alg->dim() && c.ok(); ++y) {
            int rb = F.sign_bit(x, y) ^ F.sign_bit(y, x);
            int expect = (dot_count(x, y) + rho(x) * rho(y)) & 1;
            c.require(rb == expect, [&] {
                return "commute/anticommute dichotomy fails at (" + std::to_string(x) +
                       "," + std::to_string(y) + ") in " + alg->signature().str();
            });
            if (products) {
                Scalar R = braiding(F, x, y);
                auto ex = Multivector::blade(alg, x), ey = Multivector::blade(alg, y);
                c.require(ex * ey == R * (ey * ex), [&] {
                    return "e_x e_y != R(x,y) e_y e_x at (" + std::to_string(x) + "," +
                           std::to_string(y) + ") in " + alg->signature().str();
                });
            }
        }
}

void check_theta(Check& c, const CliffordPtr& alg, bool order_reversal) {
    for (Mask x = 0; x < alg->dim() && c.ok(); ++x) {
        auto ex = Multivector::blade(alg, x);
        c.require(theta_involution(theta_involution(ex)) == ex,
                  [&] { return "Theta^2 != id at " + blade_str(x); });
        for (Mask y = 0; y < alg->dim() && c.ok(); ++y) {
            auto ey = Multivector::blade(alg, y);
            c.require(theta_involution(ex * ey) == theta_involution(ey) * theta_involution(ex),
                      [&] {
                          return "Theta not anti-multiplicative at (" + std::to_string(x) +
                                 "," + std::to_string(y) + ") in " + alg->signature().str();
                      });
        }
        if (order_reversal) {
            // Theta(e_x) as the literal product e_ik ... e_i1 of the
            // generators of x in descending order.
            auto rev = Multivector::scalar(alg, Scalar::one());
            for (int i = alg->n() - 1; i >= 0; --i)
                if ((x >> i) & 1) rev = rev * Multivector::blade(alg, Mask{1} << i);
            c.require(theta_involution(ex) == rev,
                      [&] { return "order reversal mismatch at " + blade_str(x); });
        }
    }
}

void check_sigma(Check& c, const CliffordPtr& alg, bool products) {
    for (Mask x = 0; x < alg->dim() && c.ok(); ++x) {
        auto ex = Multivector::blade(alg, x);
        c.require(sigma_automorphism(sigma_automorphism(ex)) == ex,
                  [&] { return "sigma^2 != id at " + blade_str(x); });
        if (!products) continue;
        for (Mask y = 0; y < alg->dim() && c.ok(); ++y) {
            auto ey = Multivector::blade(alg, y);
            c.require(sigma_automorphism(ex * ey) ==
                          sigma_automorphism(ex) * sigma_automorphism(ey),
                      [&] {
                          return "sigma not multiplicative at (" + std::to_string(x) + "," +
                                 std::to_string(y) + ") in " + alg->signature().str();
                      });
        }
    }
}

void check_inner_grading(Check& c, const CliffordPtr& alg) {
    // gamma^2 equals the closed form, for every n.
    Scalar esq = Scalar((rho(alg->gamma_mask()) * (rho(alg->gamma_mask()) - 1) / 2) % 2 ? -1 : 1);
    for (int i = 0; i < alg->n(); ++i) esq = esq * alg->q(i);
    auto gamma = Multivector::blade(alg, alg->gamma_mask());
    c.require((gamma * gamma).as_scalar() == std::optional<Scalar>(esq),
              [&] { return "gamma^2 != closed form in " + alg->signature().str(); });
    c.require(top_square(*alg) == esq,
              [&] { return "top_square != closed form in " + alg->signature().str(); });
    if (alg->n() % 2 != 0) return;
    // For even n, sigma is conjugation by gamma.
    auto ginv = basis_inverse(alg, alg->gamma_mask());
    for (Mask x = 0; x < alg->dim() && c.ok(); ++x) {
        auto ex = Multivector::blade(alg, x);
        c.require(gamma * ex * ginv == sigma_automorphism(ex), [&] {
            return "sigma not inner via gamma at " + blade_str(x) + " in " +
                   alg->signature().str();
        });
    }
}

void check_inverses(Check& c, const CliffordPtr& alg) {
    auto one = Multivector::scalar(alg, Scalar::one());
    for (Mask x = 0; x < alg->dim() && c.ok(); ++x) {
        auto ex = Multivector::blade(alg, x);
        auto inv = basis_inverse(alg, x);
        c.require(ex * inv == one && inv * ex == one,
                  [&] { return "e_x e_x^{-1} != 1 at " + blade_str(x); });
        // Second form: e_x^{-1} = theta(x) e_x / prod q_i^{x_i}.
        Scalar prod = Scalar::one();
        for (int i = 0; i < alg->n(); ++i)
            if ((x >> i) & 1) prod = prod * alg->q(i);
        c.require(inv == (Scalar(theta_sign(x)) / prod) * ex,
                  [&] { return "inverse closed form mismatch at " + blade_str(x); });
    }
}

void check_lambda(Check& c, const CliffordPtr& alg) {
    for (Mask x = 0; x < alg->dim() && c.ok(); ++x) {
        auto ex = Multivector::blade(alg, x);
        auto direct = (ex * sigma_automorphism(theta_involution(ex))).as_scalar();
        c.require(direct == std::optional<Scalar>(lambda_norm(*alg, x)),
                  [&] { return "lambda mismatch at " + blade_str(x); });
    }
}

void check_adjoint(Check& c, const CliffordPtr& alg) {
    for (Mask x = 0; x < alg->dim() && c.ok(); ++x) {
        auto inv = basis_inverse(alg, x);
        auto sx = sigma_automorphism(Multivector::blade(alg, x));
        for (Mask y = 0; y < alg->dim() && c.ok(); ++y) {
            auto ey = Multivector::blade(alg, y);
            c.require(adjoint_action(x, ey) == sx * ey * inv, [&] {
                return "adjoint closed form mismatch at (" + std::to_string(x) + "," +
                       std::to_string(y) + ")";
            });
        }
        // ad_{e_x} restricted to V: c e_i with c^2 = 1, so q is preserved.
        for (int i = 0; i < alg->n() && c.ok(); ++i) {
            auto img = adjoint_action(x, Multivector::blade(alg, Mask{1} << i));
            Scalar cf = img.coeff(Mask{1} << i);
            c.require(img.coeffs().size() == 1 && cf * cf == Scalar::one(), [&] {
                return "adjoint does not preserve V at (" + std::to_string(x) + ", e" +
                       std::to_string(i + 1) + ")";
            });
        }
    }
}

void check_classification(Check& c, const CliffordPtr& alg) {
    auto rep = classify(*alg);
    int n = alg->n();
    AlgebraLabel want;
    want.kind = n % 2 == 0 ? AlgebraLabel::Kind::Matrix : AlgebraLabel::Kind::DoubleMatrix;
    want.block = 1 << (n / 2);
    c.require(rep.label == want, [&] {
        return "classify(" + alg->signature().str() + ") = " + rep.label.str() +
               ", expected " + want.str() +
               (rep.checks.empty() ? "" : "; " + rep.checks.back());
    });
}

void check_spinor(Check& c, const CliffordPtr& alg) {
    int n = alg->n();
    auto rep = spinor_rep(alg);
    std::string why;
    c.require(rep.relations_hold(&why), [&] {
        return "spinor relations fail in " + alg->signature().str() + ": " + why;
    });
    // Exterior model agrees generator by generator.
    for (int a = 1; a <= 2 * n && c.ok(); ++a)
        c.require(exterior_model_matrix(a, alg) == rep.gens[size_t(a - 1)], [&] {
            return "exterior model mismatch at generator " + std::to_string(a) + " in " +
                   alg->signature().str();
        });
    // Grading operator: diagonal lambda (-1)^rho, with the closed-form
    // eigenvalue.
    auto g = grading_operator(alg);
    Scalar lam = Scalar::i_power(n);
    if ((n * (n - 1) / 2) % 2) lam = -lam;
    for (int i = 0; i < n; ++i) lam = lam * alg->q(i);
    c.require(g.lambda == lam,
              [&] { return "grading eigenvalue mismatch in " + alg->signature().str(); });
    Mat want(1 << n, 1 << n);
    for (Mask z = 0; z < alg->dim(); ++z)
        want.at(int(z), int(z)) = rho(z) % 2 ? -lam : lam;
    c.require(g.matrix == want,
              [&] { return "grading matrix not diagonal lambda (-1)^rho in " +
                           alg->signature().str(); });
}

void check_odd_extension(Check& c, const CliffordPtr& alg, const Scalar& q) {
    auto rep = spinor_rep(alg, q);  // throws if square/anticommutation fail
    std::string why;
    c.require(rep.relations_hold(&why), [&] {
        return "odd extension relations fail in " + alg->signature().str() + ": " + why;
    });
    c.require(commutant_dimension(rep) == 1, [&] {
        return "odd extension commutant != 1 in " + alg->signature().str() + ", q=" + q.str();
    });
}

// ---- the numbered sweeps ----

Result crit_cocycle(const std::optional<Signature>& sig) {
    Check c("cocycle");
    if (sig) {
        c.require(is_cocycle(Cochain::clifford(*sig)),
                  [&] { return "dF != 1 for " + sig->str(); });
        return c.done("dF == 1 for " + sig->str());
    }
    for (int n = 0; n <= 6; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
            c.require(is_cocycle(Cochain::clifford(pm1_signature(n, neg))),
                      [&] { return "dF != 1 for " + pm1_str(n, neg); });
    return c.done("dF == 1 exhaustively, n <= 6, all +-1 signatures");
}

Result crit_relations(const std::optional<Signature>& sig) {
    Check c("relations");
    if (sig) {
        check_relations(c, make_clifford(*sig));
        return c.done("generator relations hold for " + sig->str());
    }
    // Generic scalars exercise the q-dependence; +-1 masks the signs.
    std::vector<Scalar> generic = {
        Scalar(2), Scalar(Rational(-1, 3)), Scalar(Rational(1, 2)), Scalar(5),
        Scalar(-7), Scalar(Rational(3, 4)), Scalar(-2), Scalar(Rational(1, 5))};
    for (int n = 1; n <= 8 && c.ok(); ++n) {
        check_relations(c, make_clifford(Signature(std::vector<Scalar>(
                               generic.begin(), generic.begin() + n))));
        if (n <= 5)
            for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
                check_relations(c, make_clifford(pm1_signature(n, neg)));
    }
    return c.done("generator relations hold, n <= 8");
}

Result crit_small_cases() {
    Check c("small-cases");
    {
        auto a = make_clifford("-");
        auto e1 = Multivector::blade(a, 1);
        c.require(e1 * e1 == Multivector::scalar(a, Scalar(-1)),
                  [&] { return std::string("C(0,1): e1^2 != -1"); });
    }
    // Two-generator tables: e_i^2 = q_i, anticommutation, and the e1e2
    // identities (e1e2)^2 = -q1q2, (e1e2)e1 = -q1 e2, e1(e1e2) = q1 e2,
    // (e1e2)e2 = q2 e1, e2(e1e2) = -q2 e1.
    for (const char* s : {"--", "++", "+-"}) {
        auto a = make_clifford(s);
        auto e1 = Multivector::blade(a, 1), e2 = Multivector::blade(a, 2);
        auto e12 = e1 * e2;
        const Scalar &q1 = a->q(0), &q2 = a->q(1);
        std::string tag = std::string("C(") + s + "): ";
        c.require(e1 * e1 == q1 * Multivector::scalar(a, Scalar::one()) &&
                      e2 * e2 == q2 * Multivector::scalar(a, Scalar::one()),
                  [&] { return tag + "generator squares"; });
        c.require((e1 * e2 + e2 * e1).is_zero(), [&] { return tag + "anticommutation"; });
        c.require(e12 * e12 == Multivector::scalar(a, -(q1 * q2)),
                  [&] { return tag + "(e1e2)^2 != -q1q2"; });
        c.require(e12 * e1 == (-q1) * e2, [&] { return tag + "(e1e2)e1 != -q1 e2"; });
        c.require(e1 * e12 == q1 * e2, [&] { return tag + "e1(e1e2) != q1 e2"; });
        c.require(e12 * e2 == q2 * e1, [&] { return tag + "(e1e2)e2 != q2 e1"; });
        c.require(e2 * e12 == (-q2) * e1, [&] { return tag + "e2(e1e2) != -q2 e1"; });
    }
    {
        // Quaternion check: in C(--), e3 := e1e2 closes the i,j,k table.
        auto a = make_clifford("--");
        auto i = Multivector::blade(a, 1), j = Multivector::blade(a, 2);
        auto k = i * j;
        auto minus_one = Multivector::scalar(a, Scalar(-1));
        c.require(i * i == minus_one && j * j == minus_one && k * k == minus_one &&
                      i * j == k && j * k == i && k * i == j,
                  [&] { return std::string("C(0,2): quaternion table"); });
    }
    return c.done("C(0,1), C(0,2), C(2,0), C(1,1) tables reproduced");
}

Result crit_braided(const std::optional<Signature>& sig) {
    Check c("braided-commutativity");
    if (sig) {
        check_braided(c, make_clifford(*sig), /*products=*/sig->n() <= 6);
        return c.done("braided commutativity holds for " + sig->str());
    }
    for (int n = 0; n <= 6; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
            check_braided(c, make_clifford(pm1_signature(n, neg)),
                          /*products=*/neg == 0 || n <= 4);
    return c.done("exhaustive pairs, n <= 6, all +-1 signatures");
}

Result crit_theta(const std::optional<Signature>& sig) {
    Check c("theta");
    if (sig) {
        check_theta(c, make_clifford(*sig), /*order_reversal=*/sig->n() <= 5);
        return c.done("Theta anti-involution checks hold for " + sig->str());
    }
    for (int n = 0; n <= 6; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
            check_theta(c, make_clifford(pm1_signature(n, neg)),
                        /*order_reversal=*/n <= 5);
    return c.done("anti-multiplicativity n <= 6, order reversal n <= 5");
}

Result crit_sigma(const std::optional<Signature>& sig) {
    Check c("sigma");
    if (sig) {
        auto a = make_clifford(*sig);
        check_sigma(c, a, /*products=*/sig->n() <= 6);
        check_inner_grading(c, a);
        return c.done("sigma and inner grading hold for " + sig->str());
    }
    for (int n = 0; n <= 6; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg) {
            auto a = make_clifford(pm1_signature(n, neg));
            check_sigma(c, a, /*products=*/neg == 0 || n <= 4);
            check_inner_grading(c, a);
        }
    return c.done("automorphism n <= 6; inner via gamma for even n");
}

Result crit_inverses(const std::optional<Signature>& sig) {
    Check c("inverses");
    auto run = [&](const CliffordPtr& a) {
        check_inverses(c, a);
        check_lambda(c, a);
        check_adjoint(c, a);
    };
    if (sig) {
        run(make_clifford(*sig));
        return c.done("inverses, lambda, adjoint hold for " + sig->str());
    }
    for (int n = 0; n <= 5; ++n) {
        if (n <= 4)
            for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
                run(make_clifford(pm1_signature(n, neg)));
        else
            run(make_clifford(pm1_signature(n, 0b10101)));
    }
    // A non-unit-scalar signature keeps the q-dependence honest.
    run(make_clifford(Signature(
        {Scalar(2), Scalar(Rational(-1, 3)), Scalar(Rational(5, 2))})));
    return c.done("inverses, lambda and adjoint invariance, n <= 5");
}

Result crit_super_tensor() {
    Check c("super-tensor");
    auto masks_for = [](int bits, bool full) {
        std::vector<Mask> out;
        if (full) {
            for (Mask v = 0; v < (Mask{1} << bits); ++v) out.push_back(v);
        } else {
            out = {0, (Mask{1} << bits) - 1};
            if (bits >= 2) out.push_back(0b01), out.push_back(0b10);
        }
        return out;
    };
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; n + m <= 6; ++m)
            for (Mask na : masks_for(n, n + m <= 4))
                for (Mask nb : masks_for(m, n + m <= 4)) {
                    if (!c.ok()) break;
                    auto A = make_clifford(pm1_signature(n, na));
                    auto B = make_clifford(pm1_signature(m, nb));
                    Algebra t = super_tensor(*A, *B);
                    Cochain whole =
                        Cochain::clifford(concat(A->signature(), B->signature()));
                    c.require(pointwise_equal(t.cochain(), whole), [&] {
                        return "super tensor cochain != C(V+W) for " + pm1_str(n, na) +
                               " x " + pm1_str(m, nb);
                    });
                }
    return c.done("C(V+W) matches the composite cochain, n+m <= 6");
}

Result crit_process_iterate(std::uint64_t seed) {
    Check c("process-iterate");
    std::mt19937 rng(static_cast<std::uint32_t>(seed) ^ 0x9e3779b9u);
    for (int n = 0; n <= 10 && c.ok(); ++n) {
        std::vector<std::vector<int>> seqs;
        seqs.emplace_back(size_t(n), 0);
        seqs.emplace_back(size_t(n), 1);
        std::vector<int> alt(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) alt[size_t(i)] = i % 2;
        seqs.push_back(alt);
        for (int k = 0; k < 2; ++k) {
            std::vector<int> r(static_cast<size_t>(n));
            for (auto& e : r) e = int(rng() & 1);
            seqs.push_back(r);
        }
        for (const auto& eps : seqs) {
            GradedSpec got = iterate_from_field(eps);
            std::vector<Scalar> q;
            for (int e : eps) q.push_back(e ? Scalar(-1) : Scalar(1));
            Cochain want = Cochain::clifford(Signature(q));
            Mask d = Mask{1} << n;
            for (Mask x = 0; x < d && c.ok(); ++x)
                for (Mask y = 0; y < d && c.ok(); ++y)
                    c.require(got.F.sign_bit(x, y) == want.sign_bit(x, y), [&] {
                        return "iterated cochain mismatch at (" + std::to_string(x) + "," +
                               std::to_string(y) + "), n=" + std::to_string(n);
                    });
            for (Mask x = 0; x < d && c.ok(); ++x)
                c.require(got.s[size_t(x)] == Scalar(rho(x) % 2 ? -1 : 1),
                          [&] { return "iterated grading != (-1)^rho, n=" + std::to_string(n); });
        }
    }
    // Single steps: processing C(q) with q_new = +-1 is C(q, q_new).
    for (int n = 0; n <= 4 && c.ok(); ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
            for (int qs = 0; qs < 2 && c.ok(); ++qs) {
                Signature sig = pm1_signature(n, neg);
                Scalar q(qs ? -1 : 1);
                GradedSpec bar = process_once(GradedSpec::clifford(sig), q);
                Signature ext = concat(sig, Signature({q}));
                c.require(pointwise_equal(bar.F, Cochain::clifford(ext)), [&] {
                    return "one step from " + pm1_str(n, neg) + " with q=" + q.str() +
                           " is not C(" + ext.str() + ")";
                });
            }
    return c.done("iteration reproduces the closed form, n <= 10");
}

Result crit_closed_forms(std::uint64_t seed) {
    Check c("process-closed-forms");
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    const int n = 3;
    const Mask d = Mask{1} << n;
    int cocycles = 0;
    for (int trial = 0; trial < 100 && c.ok(); ++trial) {
        Cochain F = Cochain::clifford(pm1_signature(n, 0));
        if (trial % 2 == 0) {
            F = Cochain::clifford(pm1_signature(n, Mask(rng() & (d - 1))));
        } else {
            std::vector<std::uint8_t> bits(size_t(d) * d, 0);
            for (Mask x = 1; x < d; ++x)
                for (Mask y = 1; y < d; ++y) bits[size_t(x) * d + y] = rng() & 1;
            F = Cochain::sign_form(n, std::move(bits));
        }
        if (is_cocycle(F)) ++cocycles;
        Mask m = Mask(rng() & (d - 1));
        std::vector<Scalar> s;
        for (Mask x = 0; x < d; ++x) s.push_back(Scalar(dot(m, x) ? -1 : 1));
        Scalar q(rng() & 1 ? -1 : 1);
        GradedSpec bar = process_once(GradedSpec::make(F, s), q);
        for (Mask x = 0; x < 2 * d && c.ok(); ++x)
            for (Mask y = 0; y < 2 * d && c.ok(); ++y) {
                c.require(closed_braiding(bar, x, y) == braiding(bar.F, x, y), [&] {
                    return "closed braiding mismatch, trial " + std::to_string(trial) +
                           " at (" + std::to_string(x) + "," + std::to_string(y) + ")";
                });
                for (Mask z = 0; z < 2 * d && c.ok(); ++z)
                    c.require(closed_associator(bar, x, y, z) ==
                                  coboundary3(bar.F, x, y, z),
                              [&] {
                                  return "closed associator mismatch, trial " +
                                         std::to_string(trial) + " at " + triple_str(x, y, z);
                              });
            }
    }
    return c.done("closed forms match direct evaluation on 100 parents (" +
                  std::to_string(cocycles) + " cocycles)");
}

Result crit_alternativity() {
    Check c("process-alternativity");
    const int n = 2;
    const Mask d = Mask{1} << n;
    // Parents: the four Clifford cochains on Z_2^2 (cocycles), one table
    // with a single value scaled by 2, one with a single sign flipped.
    std::vector<Cochain> parents;
    for (Mask neg = 0; neg < d; ++neg)
        parents.push_back(Cochain::clifford(pm1_signature(n, neg)));
    {
        std::vector<Scalar> vals(size_t(d) * d);
        for (Mask x = 0; x < d; ++x)
            for (Mask y = 0; y < d; ++y) vals[size_t(x) * d + y] = parents[0](x, y);
        vals[size_t(3) * d + 3] = Scalar(2);
        parents.push_back(Cochain::table(n, vals));
        vals[size_t(3) * d + 3] = Scalar(-1);
        parents.push_back(Cochain::table(n, vals));
    }
    int preserved = 0, broken = 0;
    for (size_t pi = 0; pi < parents.size() && c.ok(); ++pi) {
        const Cochain& F = parents[pi];
        for (Mask m = 0; m < d && c.ok(); ++m) {
            std::vector<Scalar> s;
            for (Mask x = 0; x < d; ++x) s.push_back(Scalar(dot(m, x) ? -1 : 1));
            GradedSpec spec = GradedSpec::make(F, s);
            for (int qs = 0; qs < 2 && c.ok(); ++qs) {
                Scalar q(qs ? -1 : 1);
                if (pi < 4)
                    c.require(associativity_preserved(spec, q), [&] {
                        return "associativity not preserved for cocycle parent " +
                               std::to_string(pi);
                    });
                GradedSpec bar = process_once(spec, q);
                auto before = alternativity_check(spec);
                bool expect = before.alternative && alternativity_condition_ii(spec);
                auto after = alternativity_check(bar);
                c.require(after.alternative == expect, [&] {
                    return "alternativity verdict mismatch: parent " + std::to_string(pi) +
                           ", s-mask " + std::to_string(m) + ", q=" + q.str();
                });
                c.require(after.alternative || after.witness.has_value(), [&] {
                    return "missing witness triple for failed alternativity, parent " +
                           std::to_string(pi);
                });
                (expect ? preserved : broken)++;
            }
        }
    }
    c.require(preserved > 0 && broken > 0, [&] {
        return std::string("test corpus did not exercise both verdicts");
    });
    return c.done("verdicts match the predicate (" + std::to_string(preserved) +
                  " preserved, " + std::to_string(broken) + " broken)");
}

Result crit_periodicity() {
    Check c("periodicity");
    // phi(x) = x gamma^rho(x) multiplicative: n <= 4, 2m in {2,4}.
    for (int n = 0; n <= 4; ++n)
        for (int mm = 2; mm <= 4; mm += 2)
            for (Mask na = 0; na < (Mask{1} << n) && c.ok(); ++na)
                for (Mask nc = 0; nc < (Mask{1} << mm) && c.ok(); ++nc) {
                    auto G = make_clifford(pm1_signature(n, na));
                    auto C = make_clifford(pm1_signature(mm, nc));
                    c.require(periodicity_iso_check(*G, *C), [&] {
                        return "iso check fails for " + pm1_str(n, na) + " (x) C(" +
                               pm1_str(mm, nc) + ")";
                    });
                }
    // When mu = -1 the twist is the coboundary of i^{-rho}.
    Signature factor = pm1_signature(2, 0);  // C(2,0): mu = -1
    for (int n = 0; n <= 4; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg) {
            Cochain F = Cochain::clifford(pm1_signature(n, neg));
            Cochain Fp = periodicity_twist(F, factor);
            std::vector<Scalar> s;
            for (Mask x = 0; x < F.size(); ++x) s.push_back(Scalar::i_power(-rho(x)));
            for (Mask x = 0; x < F.size() && c.ok(); ++x)
                for (Mask y = 0; y < F.size() && c.ok(); ++y)
                    c.require(Fp(x, y) == F(x, y) * character_coboundary(s, x, y), [&] {
                        return "twist != F d(i^{-rho}) at (" + std::to_string(x) + "," +
                               std::to_string(y) + "), sig " + pm1_str(n, neg);
                    });
        }
    // Sign flip: twisting by a factor with mu = -1 negates the signature,
    // and a factor with mu = +1 leaves the cochain alone.
    for (int n = 0; n <= 3; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg) {
            Signature sig = pm1_signature(n, neg);
            Cochain F = Cochain::clifford(sig);
            for (Mask fneg = 0; fneg < 4 && c.ok(); ++fneg) {
                Signature fsig = pm1_signature(2, fneg);
                Scalar mu = top_square(CliffordAlgebra{fsig});
                Cochain Fp = periodicity_twist(F, fsig);
                Cochain want = mu == Scalar(-1) ? Cochain::clifford(sig.negated()) : F;
                c.require(pointwise_equal(Fp, want), [&] {
                    return "sign flip mismatch for " + pm1_str(n, neg) + " with factor " +
                           pm1_str(2, fneg);
                });
            }
        }
    return c.done("iso multiplicative; twist = F d(i^{-rho}); sign flip verified");
}

Result crit_classification(const std::optional<Signature>& sig) {
    Check c("classification");
    if (sig) {
        auto rep = classify(*make_clifford(*sig));
        c.require(rep.label.kind != AlgebraLabel::Kind::Unclassified, [&] {
            return "unclassified: " + (rep.checks.empty() ? "" : rep.checks.back());
        });
        return c.done("classify(" + sig->str() + ") = " + rep.label.str());
    }
    for (int n = 0; n <= 6 && c.ok(); ++n) {
        std::vector<Mask> masks = {0, (Mask{1} << n) - 1};
        if (n >= 2 && n <= 5) masks.push_back(1);
        if (n == 6) masks = {(Mask{1} << n) - 1};  // keep the big case single
        for (Mask neg : masks) {
            if (!c.ok()) break;
            check_classification(c, make_clifford(pm1_signature(n, neg)));
        }
    }
    auto rep = periodicity_table_check();
    for (const auto& item : rep.items)
        c.require(item.pass, [&] { return item.name + ": " + item.detail; });
    return c.done("M_{2^m} for even n, M+M for odd n; period-2 labels agree");
}

Result crit_spinor(const std::optional<Signature>& sig) {
    Check c("spinor");
    if (sig) {
        auto a = make_clifford(*sig);
        check_spinor(c, a);
        if (sig->n() <= 3)
            c.require(full_rep_faithfulness(a),
                      [&] { return "rank < 4^n for " + sig->str(); });
        return c.done("spinor checks hold for " + sig->str());
    }
    for (int n = 0; n <= 4; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg) {
            auto a = make_clifford(pm1_signature(n, neg));
            check_spinor(c, a);
            if (n <= 3)
                c.require(full_rep_faithfulness(a),
                          [&] { return "rank < 4^n for " + pm1_str(n, neg); });
        }
    // Homomorphism property of the two-sided action, n <= 3: the matrix
    // of a product of basis pairs is the product of their matrices.
    for (int n = 0; n <= 3; ++n) {
        std::vector<Mask> masks;
        if (n <= 2)
            for (Mask neg = 0; neg < (Mask{1} << n); ++neg) masks.push_back(neg);
        else
            masks = {0, 5};
        for (Mask neg : masks) {
            if (!c.ok()) break;
            auto a = make_clifford(pm1_signature(n, neg));
            auto dbl = std::make_shared<Algebra>(super_tensor(*a, *a));
            Mask d = a->dim();
            for (Mask x = 0; x < d && c.ok(); ++x)
                for (Mask y = 0; y < d; ++y)
                    for (Mask x2 = 0; x2 < d; ++x2)
                        for (Mask y2 = 0; y2 < d; ++y2) {
                            auto p = Multivector::blade(dbl, x | (y << n)) *
                                     Multivector::blade(dbl, x2 | (y2 << n));
                            Mask rx = x ^ x2, ry = y ^ y2;
                            Scalar cf = p.coeff(rx | (ry << n));
                            if (!(lr_matrix(x, y, a) * lr_matrix(x2, y2, a) ==
                                  cf * lr_matrix(rx, ry, a))) {
                                c.fail("action not a homomorphism at ((" +
                                       std::to_string(x) + "," + std::to_string(y) +
                                       "),(" + std::to_string(x2) + "," +
                                       std::to_string(y2) + ")), sig " + pm1_str(n, neg));
                                break;
                            }
                        }
        }
    }
    // The grading matrix is the ordered product of all 2n generators,
    // up to the coefficient the product accumulates in the double algebra.
    for (int n = 1; n <= 3 && c.ok(); ++n)
        for (Mask neg : {Mask{0}, (Mask{1} << n) - 1}) {
            if (!c.ok()) break;
            auto a = make_clifford(pm1_signature(n, neg));
            auto dbl = std::make_shared<Algebra>(super_tensor(*a, *a));
            auto gens = generator_matrices(a);
            Mat prod = Mat::identity(int(a->dim()));
            auto elt = Multivector::scalar(dbl, Scalar::one());
            for (int i = 0; i < n; ++i) {
                prod = prod * gens[size_t(i)];
                elt = elt * Multivector::blade(dbl, Mask{1} << i);
            }
            for (int i = 0; i < n; ++i) {
                prod = prod * gens[size_t(n + i)];
                elt = elt * Multivector::blade(dbl, Mask{1} << (n + i));
            }
            Mask top = a->gamma_mask();
            Scalar cf = elt.coeff(top | (top << n));
            c.require(prod == cf * grading_operator(a).matrix, [&] {
                return "generator product != top (x) top matrix, sig " + pm1_str(n, neg);
            });
        }
    return c.done("relations, homomorphism, faithfulness, exterior model, grading");
}

Result crit_odd_extension(const std::optional<Signature>& sig) {
    Check c("odd-extension");
    if (sig) {
        for (int qs = 0; qs < 2 && c.ok(); ++qs)
            check_odd_extension(c, make_clifford(*sig), Scalar(qs ? -1 : 1));
        return c.done("odd extension holds for " + sig->str());
    }
    for (int n = 0; n <= 3; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
            for (int qs = 0; qs < 2 && c.ok(); ++qs)
                check_odd_extension(c, make_clifford(pm1_signature(n, neg)),
                                    Scalar(qs ? -1 : 1));
    return c.done("square, anticommutation, commutant 1; n <= 3, q = +-1");
}

Result crit_rep_ladder() {
    Check c("rep-ladder");
    Rep r;  // C(0,0): the ground field acting on a line
    std::vector<bool> expect_doubled = {false, true, false};
    for (int step = 0; step < 3 && c.ok(); ++step) {
        auto ext = rep_extend(r, Scalar::one());
        r = ext.rep;
        std::string rung = "C(" + std::to_string(step + 1) + ",0)";
        c.require(ext.doubled == expect_doubled[size_t(step)],
                  [&] { return rung + ": unexpected doubling"; });
        c.require(ext.q_used == Scalar::one(), [&] { return rung + ": q != 1"; });
        std::string why;
        c.require(r.relations_hold(&why), [&] { return rung + ": " + why; });
        c.require(commutant_dimension(r) == 1, [&] { return rung + ": commutant != 1"; });
        int want_dim = step == 0 ? 1 : 2;
        c.require(r.dim == want_dim, [&] {
            return rung + ": dim " + std::to_string(r.dim) + " != " +
                   std::to_string(want_dim);
        });
    }
    return c.done("C(0,0) -> C(1,0) -> C(2,0) -> C(3,0), irreducible at each rung");
}

Result crit_dirac(std::uint64_t seed) {
    Check c("dirac");
    // Exhaustive: every monomial of degree <= 3 in every component.
    std::vector<Monomial> mons;
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; a + b <= 3; ++b)
            for (unsigned d = 0; a + b + d <= 3; ++d)
                for (unsigned e = 0; a + b + d + e <= 3; ++e)
                    mons.push_back(Monomial{{a, b, d, e}});
    for (const auto& m : mons)
        for (int comp = 0; comp < 4 && c.ok(); ++comp) {
            PolySpinor psi = PolySpinor::component(comp, Poly::term(m, Scalar::one()));
            PolySpinor dd = dirac_apply(dirac_apply(psi));
            c.require(dd == -Scalar::one() * laplacian(psi), [&] {
                return "D^2 != -Laplacian on x1^" + std::to_string(m.e[0]) + " x2^" +
                       std::to_string(m.e[1]) + " x3^" + std::to_string(m.e[2]) + " x4^" +
                       std::to_string(m.e[3]) + " * component " + std::to_string(comp);
            });
        }
    // Randomized: the three operator forms agree.
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    for (int trial = 0; trial < 50 && c.ok(); ++trial) {
        PolySpinor psi;
        for (int comp = 0; comp < 4; ++comp) {
            Poly p;
            int terms = 1 + int(rng() % 4);
            for (int t = 0; t < terms; ++t) {
                const Monomial& m = mons[rng() % mons.size()];
                Scalar coeff(Rational(int(rng() % 11) - 5),
                             Rational(int(rng() % 11) - 5));
                if (coeff.is_zero()) coeff = Scalar::one();
                p = p + Poly::term(m, coeff);
            }
            psi = psi + PolySpinor::component(comp, p);
        }
        PolySpinor a = dirac_apply(psi);
        c.require(a == dirac_component_form(psi) && a == dirac_curl_form(psi), [&] {
            return "operator forms disagree on trial " + std::to_string(trial);
        });
        c.require(dirac_apply(a) == -Scalar::one() * laplacian(psi),
                  [&] { return "D^2 != -Laplacian on trial " + std::to_string(trial); });
    }
    return c.done("D^2 = -Laplacian (deg <= 3 exhaustive); three forms agree (50 trials)");
}

}  // namespace

std::vector<Result> run_all(std::uint64_t seed) {
    std::vector<Result> out;
    out.push_back(crit_cocycle(std::nullopt));
    out.push_back(crit_relations(std::nullopt));
    out.push_back(crit_small_cases());
    out.push_back(crit_braided(std::nullopt));
    out.push_back(crit_theta(std::nullopt));
    out.push_back(crit_sigma(std::nullopt));
    out.push_back(crit_inverses(std::nullopt));
    out.push_back(crit_super_tensor());
    out.push_back(crit_process_iterate(seed));
    out.push_back(crit_closed_forms(seed));
    out.push_back(crit_alternativity());
    out.push_back(crit_periodicity());
    out.push_back(crit_classification(std::nullopt));
    out.push_back(crit_spinor(std::nullopt));
    out.push_back(crit_odd_extension(std::nullopt));
    out.push_back(crit_rep_ladder());
    out.push_back(crit_dirac(seed));
    return out;
}

std::vector<std::string> suite_names() {
    return {"cocycle",       "relations",      "small-cases",
            "braided-commutativity", "theta",  "sigma",
            "inner-grading", "adjoint",        "lambda",
            "inverses",      "super-tensor",   "process-iterate",
            "process-closed-forms", "process-alternativity",
            "periodicity",   "classification", "spinor",
            "odd-extension", "rep-ladder",     "dirac"};
}

Result run_suite(const std::string& name, const std::optional<Signature>& sig,
                 std::uint64_t seed) {
    if (name == "cocycle") return crit_cocycle(sig);
    if (name == "relations") return crit_relations(sig);
    if (name == "small-cases") return crit_small_cases();
    if (name == "braided-commutativity") return crit_braided(sig);
    if (name == "theta") return crit_theta(sig);
    if (name == "sigma") return crit_sigma(sig);
    if (name == "inner-grading") {
        Check c("inner-grading");
        if (sig) {
            check_inner_grading(c, make_clifford(*sig));
            return c.done("gamma implements sigma for " + sig->str());
        }
        for (int n = 0; n <= 6; ++n)
            for (Mask neg = 0; neg < (Mask{1} << n) && c.ok(); ++neg)
                check_inner_grading(c, make_clifford(pm1_signature(n, neg)));
        return c.done("gamma^2 closed form; sigma inner for even n <= 6");
    }
    if (name == "adjoint") {
        Check c("adjoint");
        if (sig) {
            check_adjoint(c, make_clifford(*sig));
            return c.done("adjoint action checks hold for " + sig->str());
        }
        for (int n = 0; n <= 5; ++n)
            check_adjoint(c, make_clifford(pm1_signature(n, n >= 1 ? Mask{1} : Mask{0})));
        return c.done("adjoint closed form and invariance, n <= 5");
    }
    if (name == "lambda") {
        Check c("lambda");
        if (sig) {
            check_lambda(c, make_clifford(*sig));
            return c.done("lambda closed form holds for " + sig->str());
        }
        for (int n = 0; n <= 5; ++n)
            for (Mask neg = 0; neg < (Mask{1} << std::min(n, 4)) && c.ok(); ++neg)
                check_lambda(c, make_clifford(pm1_signature(n, neg)));
        return c.done("lambda closed form, n <= 5");
    }
    if (name == "inverses") return crit_inverses(sig);
    if (name == "super-tensor") return crit_super_tensor();
    if (name == "process-iterate") return crit_process_iterate(seed);
    if (name == "process-closed-forms") return crit_closed_forms(seed);
    if (name == "process-alternativity") return crit_alternativity();
    if (name == "periodicity") return crit_periodicity();
    if (name == "classification") return crit_classification(sig);
    if (name == "spinor") return crit_spinor(sig);
    if (name == "odd-extension") return crit_odd_extension(sig);
    if (name == "rep-ladder") return crit_rep_ladder();
    if (name == "dirac") return crit_dirac(seed);
    throw error("unknown suite: " + name);
}

}  // namespace kfg::verify
