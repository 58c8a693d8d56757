#include "kfg/tensor.hpp"

#include <algorithm>

namespace kfg {

std::vector<Scalar> StructAlgebra::mul(const std::vector<Scalar>& a,
                                       const std::vector<Scalar>& b) const {
    std::vector<Scalar> out(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        if (a[size_t(i)].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[size_t(j)].is_zero()) continue;
            Scalar f = a[size_t(i)] * b[size_t(j)];
            for (int k = 0; k < dim; ++k) {
                const Scalar& s = sc(i, j, k);
                if (!s.is_zero()) out[size_t(k)] += f * s;
            }
        }
    }
    return out;
}

StructAlgebra to_struct(const Algebra& alg) {
    int d = static_cast<int>(alg.dim());
    StructAlgebra out;
    out.dim = d;
    out.c.assign(size_t(d) * d * d, Scalar::zero());
    for (Mask x = 0; x < alg.dim(); ++x)
        for (Mask y = 0; y < alg.dim(); ++y)
            out.sc(int(x), int(y), int(x ^ y)) = alg.cochain()(x, y);
    out.unit.assign(size_t(d), Scalar::zero());
    out.unit[0] = Scalar(1);
    return out;
}

StructAlgebra ordinary_tensor(const StructAlgebra& a, const StructAlgebra& b) {
    StructAlgebra out;
    out.dim = a.dim * b.dim;
    out.c.assign(size_t(out.dim) * out.dim * out.dim, Scalar::zero());
    for (int i1 = 0; i1 < a.dim; ++i1)
        for (int j1 = 0; j1 < b.dim; ++j1)
            for (int i2 = 0; i2 < a.dim; ++i2)
                for (int j2 = 0; j2 < b.dim; ++j2)
                    for (int i3 = 0; i3 < a.dim; ++i3) {
                        const Scalar& ca = a.sc(i1, i2, i3);
                        if (ca.is_zero()) continue;
                        for (int j3 = 0; j3 < b.dim; ++j3) {
                            const Scalar& cb = b.sc(j1, j2, j3);
                            if (!cb.is_zero())
                                out.sc(i1 * b.dim + j1, i2 * b.dim + j2,
                                       i3 * b.dim + j3) = ca * cb;
                        }
                    }
    out.unit.assign(size_t(out.dim), Scalar::zero());
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            Scalar u = a.unit[size_t(i)] * b.unit[size_t(j)];
            if (!u.is_zero()) out.unit[size_t(i * b.dim + j)] = u;
        }
    return out;
}

Algebra super_tensor(const CliffordAlgebra& a, const CliffordAlgebra& b) {
    int n = a.n(), m = b.n();
    Mask d = Mask{1} << (n + m), low = a.dim() - 1;
    std::vector<Scalar> vals(size_t(d) * d);
    for (Mask x = 0; x < d; ++x)
        for (Mask y = 0; y < d; ++y) {
            Mask xa = x & low, xb = x >> n;
            Mask ya = y & low, yb = y >> n;
            Scalar v = a.cochain()(xa, ya) * b.cochain()(xb, yb);
            if ((rho(xb) & 1) && (rho(ya) & 1)) v = -v;
            vals[size_t(x) * d + y] = std::move(v);
        }
    return Algebra(Cochain::table(n + m, std::move(vals)));
}

namespace {

Scalar factor_mu(const Signature& sig) {
    if (sig.n() % 2 != 0) throw error("periodicity twist needs an even factor");
    if (!sig.all_pm1()) throw error("periodicity twist needs a +-1 signature");
    int m = sig.n() / 2;
    Scalar mu = (m * (2 * m - 1)) % 2 ? Scalar(-1) : Scalar(1);
    for (const auto& qi : sig.q) mu *= qi;
    return mu;
}

}  // namespace

Cochain periodicity_twist(const Cochain& F, const Signature& factor_sig) {
    Scalar mu = factor_mu(factor_sig);
    Mask d = F.size();
    // mu^{(rho(xy)-rho(x)-rho(y))/2} = mu^{-x.y} = mu^{x.y} for mu = +-1
    if (F.pm1_valued()) {
        std::vector<std::uint8_t> f(size_t(d) * d);
        int flip = mu == Scalar(-1) ? 1 : 0;
        for (Mask x = 0; x < d; ++x)
            for (Mask y = 0; y < d; ++y)
                f[size_t(x) * d + y] =
                    std::uint8_t(F.sign_bit(x, y) ^ (flip & dot(x, y)));
        return Cochain::sign_form(F.n(), std::move(f));
    }
    std::vector<Scalar> vals(size_t(d) * d);
    for (Mask x = 0; x < d; ++x)
        for (Mask y = 0; y < d; ++y) {
            Scalar v = F(x, y);
            if (mu == Scalar(-1) && dot(x, y)) v = -v;
            vals[size_t(x) * d + y] = std::move(v);
        }
    return Cochain::table(F.n(), std::move(vals));
}

bool periodicity_iso_check(const CliffordAlgebra& kfg_part,
                           const CliffordAlgebra& factor) {
    const Cochain& F = kfg_part.cochain();
    const Cochain& FC = factor.cochain();
    Cochain Fp = periodicity_twist(F, factor.signature());
    Mask dg = kfg_part.dim(), dc = factor.dim();
    Mask gamma = dc - 1;

    // gamma^k = mu^{floor(k/2)} gamma^{k mod 2}; the mu factor matters.
    Scalar mu = top_square(factor);

    if (F.pm1_valued() && FC.pm1_valued()) {
        // everything is a sign; compare exponent bits
        int mu_bit = mu == Scalar(-1) ? 1 : 0;
        auto phi_bit = [&](Mask x, Mask u) {
            int b = (rho(x) & 1) ? FC.sign_bit(gamma, u) : 0;
            return b ^ (mu_bit & (rho(x) >> 1) & 1);
        };
        auto phi_mask = [&](Mask x, Mask u) -> Mask {
            return (rho(x) & 1) ? (gamma ^ u) : u;
        };
        for (Mask x = 0; x < dg; ++x)
            for (Mask u = 0; u < dc; ++u)
                for (Mask y = 0; y < dg; ++y)
                    for (Mask w = 0; w < dc; ++w) {
                        int lhs = F.sign_bit(x, y) ^ FC.sign_bit(u, w) ^
                                  ((rho(u) & rho(y)) & 1) ^ phi_bit(x ^ y, u ^ w);
                        Mask gu = phi_mask(x, u), gw = phi_mask(y, w);
                        int rhs = phi_bit(x, u) ^ phi_bit(y, w) ^
                                  Fp.sign_bit(x, y) ^ FC.sign_bit(gu, gw);
                        if (lhs != rhs ||
                            phi_mask(x ^ y, u ^ w) != (gu ^ gw))
                            return false;
                    }
        return true;
    }

    // phi(x (x) u) = x (x) gamma^{rho(x)} u, with the C-side product fixed up.
    auto phi_coeff = [&](Mask x, Mask u) -> Scalar {
        Scalar c = (rho(x) & 1) ? FC(gamma, u) : Scalar(1);
        if ((rho(x) >> 1) & 1) c = c * mu;
        return c;
    };
    auto phi_mask = [&](Mask x, Mask u) -> Mask {
        return (rho(x) & 1) ? (gamma ^ u) : u;
    };

    for (Mask x = 0; x < dg; ++x)
        for (Mask u = 0; u < dc; ++u)
            for (Mask y = 0; y < dg; ++y)
                for (Mask w = 0; w < dc; ++w) {
                    // left side: product in k_F G super-tensor C, then phi
                    Scalar lhs = F(x, y) * FC(u, w);
                    if ((rho(u) & 1) && (rho(y) & 1)) lhs = -lhs;
                    lhs *= phi_coeff(x ^ y, u ^ w);
                    Mask lhs_mask = phi_mask(x ^ y, u ^ w);
                    // right side: phi of each factor, then the ordinary
                    // tensor product with the twisted cochain F'
                    Mask gu = phi_mask(x, u), gw = phi_mask(y, w);
                    Scalar rhs = phi_coeff(x, u) * phi_coeff(y, w) *
                                 Fp(x, y) * FC(gu, gw);
                    Mask rhs_mask = gu ^ gw;
                    if (lhs_mask != rhs_mask || lhs != rhs) return false;
                }
    return true;
}

std::string AlgebraLabel::str() const {
    switch (kind) {
        case Kind::Matrix: return "M_" + std::to_string(block);
        case Kind::DoubleMatrix:
            return "M_" + std::to_string(block) + "+M_" + std::to_string(block);
        case Kind::Unclassified: return "unclassified: " + detail;
    }
    return "?";
}

std::vector<std::vector<Scalar>> center_basis(const StructAlgebra& a) {
    int d = a.dim;
    // z b_i = b_i z for every basis element; unknowns are the d
    // coordinates of z.
    Mat sys(d * d, d);
    for (int i = 0; i < d; ++i)
        for (int m = 0; m < d; ++m)
            for (int k = 0; k < d; ++k)
                sys.at(i * d + m, k) = a.sc(k, i, m) - a.sc(i, k, m);
    return nullspace(std::move(sys));
}

namespace {

constexpr int kSimpleCheckMaxDim = 16;

// Rank of the span of the operators w -> b_i w b_j inside End(A).
bool left_right_full_rank(const StructAlgebra& a) {
    int d = a.dim;
    Mat span(d * d, d * d);  // row = operator index (i,j), col = entry of End
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)      // column basis vector b_k
                for (int m = 0; m < d; ++m)  // b_i b_k = sum_m ...
                {
                    const Scalar& cm = a.sc(i, k, m);
                    if (cm.is_zero()) continue;
                    for (int l = 0; l < d; ++l) {
                        const Scalar& cl = a.sc(m, j, l);
                        if (!cl.is_zero())
                            span.at(i * d + j, l * d + k) += cm * cl;
                    }
                }
    return rank(std::move(span)) == d * d;
}

// Extracts the two-sided ideal u A for a central idempotent u and
// returns it as a structure algebra.
StructAlgebra split_summand(const StructAlgebra& a, const std::vector<Scalar>& u) {
    int d = a.dim;
    // images u b_k, as columns
    std::vector<std::vector<Scalar>> images;
    for (int k = 0; k < d; ++k) {
        std::vector<Scalar> bk(static_cast<size_t>(d));
        bk[size_t(k)] = Scalar(1);
        images.push_back(a.mul(u, bk));
    }
    // independent subset by incremental elimination
    std::vector<std::vector<Scalar>> basis;
    Mat acc(0, 0);
    for (const auto& img : images) {
        Mat trial(static_cast<int>(basis.size()) + 1, d);
        for (size_t r = 0; r < basis.size(); ++r)
            for (int cidx = 0; cidx < d; ++cidx) trial.at(int(r), cidx) = basis[r][size_t(cidx)];
        for (int cidx = 0; cidx < d; ++cidx)
            trial.at(static_cast<int>(basis.size()), cidx) = img[size_t(cidx)];
        if (rank(std::move(trial)) == static_cast<int>(basis.size()) + 1)
            basis.push_back(img);
    }
    int r = static_cast<int>(basis.size());
    Mat B(d, r);
    for (int col = 0; col < r; ++col)
        for (int row = 0; row < d; ++row) B.at(row, col) = basis[size_t(col)][size_t(row)];

    auto coords = [&](const std::vector<Scalar>& v) {
        auto x = solve(B, v);
        if (!x) throw error("summand product left the ideal");
        return *x;
    };

    StructAlgebra out;
    out.dim = r;
    out.c.assign(size_t(r) * r * r, Scalar::zero());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            auto prod = coords(a.mul(basis[size_t(i)], basis[size_t(j)]));
            for (int k = 0; k < r; ++k) out.sc(i, j, k) = prod[size_t(k)];
        }
    out.unit = coords(a.mul(u, a.unit));
    return out;
}

}  // namespace

AlgebraLabel classify(const StructAlgebra& a) {
    auto center = center_basis(a);
    if (center.size() == 1) {
        if (a.dim == 1) return {AlgebraLabel::Kind::Matrix, 1, ""};
        int root = 1;
        while (root * root < a.dim) ++root;
        if (root * root != a.dim)
            return {AlgebraLabel::Kind::Unclassified, 0, "dimension is not a square"};
        if (a.dim > kSimpleCheckMaxDim)
            return {AlgebraLabel::Kind::Unclassified, 0,
                    "too large for the left-right rank check"};
        if (!left_right_full_rank(a))
            return {AlgebraLabel::Kind::Unclassified, 0,
                    "center is trivial but the algebra is not simple"};
        return {AlgebraLabel::Kind::Matrix, root, ""};
    }
    if (center.size() == 2) {
        // pick w independent of the unit, find the idempotent in k[w]
        Mat test(2, a.dim);
        for (int cidx = 0; cidx < a.dim; ++cidx) test.at(0, cidx) = a.unit[size_t(cidx)];
        std::vector<Scalar> w;
        for (const auto& z : center) {
            for (int cidx = 0; cidx < a.dim; ++cidx) test.at(1, cidx) = z[size_t(cidx)];
            Mat copy = test;
            if (rank(std::move(copy)) == 2) {
                w = z;
                break;
            }
        }
        if (w.empty())
            return {AlgebraLabel::Kind::Unclassified, 0, "degenerate center basis"};
        // w^2 = alpha 1 + beta w
        auto w2 = a.mul(w, w);
        Mat B(a.dim, 2);
        for (int row = 0; row < a.dim; ++row) {
            B.at(row, 0) = a.unit[size_t(row)];
            B.at(row, 1) = w[size_t(row)];
        }
        auto ab = solve(B, w2);
        if (!ab) return {AlgebraLabel::Kind::Unclassified, 0, "center is not quadratic"};
        Scalar alpha = (*ab)[0], beta = (*ab)[1];
        // idempotent u = (1 - beta t)/2 + t w with t^2 = 1/(beta^2 + 4 alpha)
        Scalar disc = beta * beta + Scalar(4) * alpha;
        auto t = disc.is_zero() ? std::nullopt : gaussian_sqrt(disc.inverse());
        if (!t)
            return {AlgebraLabel::Kind::Unclassified, 0,
                    "center does not split over Q(i)"};
        Scalar half(Rational(1, 2));
        Scalar a0 = half * (Scalar(1) - beta * *t);
        std::vector<Scalar> u(static_cast<size_t>(a.dim));
        for (int k = 0; k < a.dim; ++k)
            u[size_t(k)] = a0 * a.unit[size_t(k)] + *t * w[size_t(k)];
        if (a.mul(u, u) != u) throw error("idempotent construction failed");
        std::vector<Scalar> ucomp(static_cast<size_t>(a.dim));
        for (int k = 0; k < a.dim; ++k) ucomp[size_t(k)] = a.unit[size_t(k)] - u[size_t(k)];

        AlgebraLabel l1 = classify(split_summand(a, u));
        AlgebraLabel l2 = classify(split_summand(a, ucomp));
        if (l1.kind == AlgebraLabel::Kind::Matrix && l1 == l2)
            return {AlgebraLabel::Kind::DoubleMatrix, l1.block, ""};
        return {AlgebraLabel::Kind::Unclassified, 0,
                "summands " + l1.str() + " and " + l2.str()};
    }
    return {AlgebraLabel::Kind::Unclassified, 0,
            "center dimension " + std::to_string(center.size())};
}

ClassifyReport classify(const CliffordAlgebra& alg) {
    ClassifyReport rep;
    if (!alg.signature().all_pm1()) {
        rep.label = {AlgebraLabel::Kind::Unclassified, 0, "signature is not +-1"};
        rep.checks.push_back("refused: non +-1 signature");
        return rep;
    }
    int n = alg.n();

    // center dimension straight from the structure constants
    StructAlgebra sa = to_struct(alg);
    rep.center_dim = static_cast<int>(center_basis(sa).size());

    if (n % 2 == 0) {
        // irreducible rep of dimension 2^{n/2} by the process ladder
        Rep r{1, {}, {}};
        for (const auto& qi : alg.signature().q) {
            auto ext = rep_extend(r, qi);
            if (ext.q_used != qi) {
                rep.label = {AlgebraLabel::Kind::Unclassified, 0,
                             "ladder could not realize q_i"};
                return rep;
            }
            r = std::move(ext.rep);
        }
        int want = 1 << (n / 2);
        bool ok = r.dim == want && r.relations_hold() && commutant_dimension(r) == 1;
        rep.checks.push_back(std::string("ladder rep relations+irreducible: ") +
                             (ok ? "pass" : "fail"));
        if (ok) {
            // faithfulness: blade images linearly independent in End(W)
            std::vector<Mat> blades(alg.dim(), Mat::identity(r.dim));
            for (Mask x = 1; x < alg.dim(); ++x) {
                Mat m = Mat::identity(r.dim);
                Mask t = x;
                while (t) {
                    int i = std::countr_zero(t);
                    t &= t - 1;
                    m = m * r.gens[size_t(i)];
                }
                blades[x] = std::move(m);
            }
            Mat stack(static_cast<int>(alg.dim()), r.dim * r.dim);
            for (Mask x = 0; x < alg.dim(); ++x)
                for (int e = 0; e < r.dim * r.dim; ++e)
                    stack.at(int(x), e) = blades[x].data()[size_t(e)];
            bool faithful = rank(std::move(stack)) == static_cast<int>(alg.dim());
            rep.checks.push_back(std::string("blade images independent: ") +
                                 (faithful ? "pass" : "fail"));
            ok = faithful && rep.center_dim == 1;
        }
        rep.label = ok ? AlgebraLabel{AlgebraLabel::Kind::Matrix, 1 << (n / 2), ""}
                       : AlgebraLabel{AlgebraLabel::Kind::Unclassified, 0,
                                      "even-case checks failed"};
        return rep;
    }

    // odd n: gamma is central with gamma^2 = mu
    Scalar mu = top_square(alg);
    rep.mu = mu;
    auto smu = gaussian_sqrt(mu);
    if (!smu) {
        rep.label = {AlgebraLabel::Kind::Unclassified, 0, "gamma^2 has no sqrt"};
        return rep;
    }
    Scalar half(Rational(1, 2));
    Mask g = alg.gamma_mask();
    std::vector<Scalar> u(static_cast<size_t>(alg.dim())), ucomp(static_cast<size_t>(alg.dim()));
    u[0] = half;
    u[g] = half / *smu;
    ucomp[0] = half;
    ucomp[g] = -u[g];
    AlgebraLabel l1 = classify(split_summand(sa, u));
    AlgebraLabel l2 = classify(split_summand(sa, ucomp));
    rep.checks.push_back("summands: " + l1.str() + ", " + l2.str());
    if (l1.kind == AlgebraLabel::Kind::Matrix && l1 == l2)
        rep.label = {AlgebraLabel::Kind::DoubleMatrix, l1.block, ""};
    else
        rep.label = {AlgebraLabel::Kind::Unclassified, 0, "unequal summands"};
    return rep;
}

bool PeriodicityReport::all_pass() const {
    return std::ranges::all_of(items, [](const Item& i) { return i.pass; });
}

PeriodicityReport periodicity_table_check() {
    PeriodicityReport out;
    auto add = [&out](std::string name, bool pass, std::string detail = "") {
        out.items.push_back({std::move(name), pass, std::move(detail)});
    };

    auto sig_rs = [](int r, int s) {
        std::vector<Scalar> q;
        for (int i = 0; i < r; ++i) q.emplace_back(1);
        for (int i = 0; i < s; ++i) q.emplace_back(-1);
        return Signature(std::move(q));
    };

    // (perlemm) instances: phi multiplicative and F' flips the signature
    for (int n = 0; n <= 3; ++n)
        for (Mask neg = 0; neg < (Mask{1} << n); ++neg) {
            std::vector<Scalar> q;
            for (int i = 0; i < n; ++i)
                q.emplace_back((neg >> i) & 1 ? Scalar(-1) : Scalar(1));
            CliffordAlgebra lhs{Signature(q)};
            for (int plus : {0, 2}) {
                CliffordAlgebra cpm{sig_rs(plus, 2 - plus)};
                bool iso = periodicity_iso_check(lhs, cpm);
                Scalar mu = top_square(cpm);
                Cochain twisted = periodicity_twist(lhs.cochain(), cpm.signature());
                bool flip = true;
                if (mu == Scalar(-1))
                    flip = pointwise_equal(
                        twisted, Cochain::clifford(lhs.signature().negated()));
                else
                    flip = pointwise_equal(twisted, lhs.cochain());
                add("perlemm n=" + std::to_string(n) + " neg=" + std::to_string(neg) +
                        (plus ? " C(+)" : " C(-)"),
                    iso && flip);
            }
        }

    StructAlgebra quat = to_struct(CliffordAlgebra{sig_rs(0, 2)});
    StructAlgebra m2 = to_struct(CliffordAlgebra{sig_rs(2, 0)});

    // (per): C(0,n+2) ~ C(n,0) x H and C(n+2,0) ~ C(0,n) x M_2
    for (int n = 0; n <= 3; ++n) {
        AlgebraLabel l1 = classify(CliffordAlgebra{sig_rs(0, n + 2)}).label;
        AlgebraLabel r1 =
            classify(ordinary_tensor(to_struct(CliffordAlgebra{sig_rs(n, 0)}), quat));
        add("per C(0," + std::to_string(n + 2) + ")=C(" + std::to_string(n) +
                ",0)xH",
            l1 == r1 && l1.kind != AlgebraLabel::Kind::Unclassified,
            l1.str() + " vs " + r1.str());

        AlgebraLabel l2 = classify(CliffordAlgebra{sig_rs(n + 2, 0)}).label;
        AlgebraLabel r2 =
            classify(ordinary_tensor(to_struct(CliffordAlgebra{sig_rs(0, n)}), m2));
        add("per C(" + std::to_string(n + 2) + ",0)=C(0," + std::to_string(n) +
                ")xM2",
            l2 == r2 && l2.kind != AlgebraLabel::Kind::Unclassified,
            l2.str() + " vs " + r2.str());
    }

    AlgebraLabel hh = classify(ordinary_tensor(quat, quat));
    add("HxH=M4", hh == AlgebraLabel{AlgebraLabel::Kind::Matrix, 4, ""}, hh.str());
    return out;
}

}  // namespace kfg
