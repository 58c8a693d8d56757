#include "kfg/process.hpp"

#include <algorithm>

namespace kfg {

bool GradedSpec::s_pm1() const {
    return std::ranges::all_of(
        s, [](const Scalar& v) { return v == Scalar(1) || v == Scalar(-1); });
}

bool GradedSpec::s_is_character() const {
    for (Mask x = 0; x < dim(); ++x)
        for (Mask y = 0; y < dim(); ++y)
            if (s[x] * s[y] != s[x ^ y]) return false;
    return true;
}

bool GradedSpec::s_involutive_character() const {
    if (!s_is_character()) return false;
    return std::ranges::all_of(s, [](const Scalar& v) { return (v * v).is_one(); });
}

GradedSpec GradedSpec::make(Cochain F, std::vector<Scalar> s) {
    if (s.size() != F.size()) throw error("grading function has wrong size");
    if (!s[0].is_one()) throw error("grading function must have s(0) = 1");
    for (const auto& v : s)
        if (v.is_zero()) throw error("grading function must be nowhere zero");
    GradedSpec spec{Cochain::clifford(Signature{}), {}, std::nullopt, nullptr, Scalar(1)};
    spec.F = std::move(F);
    spec.s = std::move(s);
    return spec;
}

GradedSpec GradedSpec::clifford(Signature sig) {
    Mask d = Mask{1} << sig.n();
    std::vector<Scalar> s(d);
    std::vector<std::uint8_t> xi(d);
    for (Mask x = 0; x < d; ++x) {
        xi[x] = rho(x) & 1;
        s[x] = xi[x] ? Scalar(-1) : Scalar(1);
    }
    auto spec = make(Cochain::clifford(std::move(sig)), std::move(s));
    spec.xi = std::move(xi);
    return spec;
}

GradedSpec process_once(const GradedSpec& spec, const Scalar& q) {
    if (q.is_zero()) throw error("process parameter q must be nonzero");
    int n = spec.n();
    Mask d = spec.dim(), dbar = d << 1;
    Mask v = d;  // the new top bit

    bool sign_case = spec.F.pm1_valued() && spec.s_pm1() &&
                     (q == Scalar(1) || q == Scalar(-1));

    Cochain Fbar = Cochain::clifford(Signature{});
    if (sign_case) {
        int eps = q == Scalar(-1) ? 1 : 0;
        std::vector<std::uint8_t> f(size_t(dbar) * dbar);
        for (Mask xb = 0; xb < dbar; ++xb)
            for (Mask yb = 0; yb < dbar; ++yb) {
                Mask x = xb & (d - 1), y = yb & (d - 1);
                int b = spec.F.sign_bit(x, y);
                if (xb & v) {
                    if (spec.s[y] == Scalar(-1)) b ^= 1;
                    if ((yb & v) && eps) b ^= 1;
                }
                f[size_t(xb) * dbar + yb] = std::uint8_t(b);
            }
        Fbar = Cochain::sign_form(n + 1, std::move(f));
    } else {
        std::vector<Scalar> vals(size_t(dbar) * dbar);
        for (Mask xb = 0; xb < dbar; ++xb)
            for (Mask yb = 0; yb < dbar; ++yb) {
                Mask x = xb & (d - 1), y = yb & (d - 1);
                Scalar val = spec.F(x, y);
                if (xb & v) {
                    val *= spec.s[y];
                    if (yb & v) val *= q;
                }
                vals[size_t(xb) * dbar + yb] = std::move(val);
            }
        Fbar = Cochain::table(n + 1, std::move(vals));
    }

    std::vector<Scalar> sbar(dbar);
    for (Mask xb = 0; xb < dbar; ++xb)
        sbar[xb] = (xb & v) ? -spec.s[xb & (d - 1)] : spec.s[xb];

    GradedSpec out = GradedSpec::make(std::move(Fbar), std::move(sbar));
    if (spec.xi) {
        std::vector<std::uint8_t> xibar(dbar);
        for (Mask xb = 0; xb < dbar; ++xb)
            xibar[xb] = (*spec.xi)[xb & (d - 1)] ^ ((xb & v) ? 1 : 0);
        out.xi = std::move(xibar);
    }
    out.parent = std::make_shared<GradedSpec>(spec);
    out.parent_q = q;
    return out;
}

namespace {

const GradedSpec& parent_of(const GradedSpec& bar) {
    if (!bar.parent) throw error("spec was not produced by process_once");
    return *bar.parent;
}

}  // namespace

Scalar closed_associator(const GradedSpec& bar, Mask x, Mask y, Mask z) {
    const GradedSpec& p = parent_of(bar);
    Mask v = Mask{1} << p.n(), low = v - 1;
    Scalar phi = coboundary3(p.F, x & low, y & low, z & low);
    if (x & v) {
        Mask y0 = y & low, z0 = z & low;
        phi *= p.s[y0] * p.s[z0] / p.s[y0 ^ z0];
    }
    return phi;
}

Scalar closed_braiding(const GradedSpec& bar, Mask x, Mask y) {
    const GradedSpec& p = parent_of(bar);
    Mask v = Mask{1} << p.n(), low = v - 1;
    Scalar r = braiding(p.F, x & low, y & low);
    if (x & v) r *= p.s[y & low];
    if (y & v) r /= p.s[x & low];
    return r;
}

bool associativity_preserved(const GradedSpec& spec, const Scalar& q) {
    if (!spec.s_involutive_character())
        throw error("associativity_preserved requires s to be a +-1 character");
    GradedSpec bar = process_once(spec, q);
    bool child = is_cocycle(bar.F);
    bool parent = is_cocycle(spec.F);
    if (child != parent)
        throw error("associativity was not preserved by the process");
    return child;
}

AlternativityResult alternativity_check(const GradedSpec& spec) {
    if (spec.n() > 8) throw error("alternativity check capped at n <= 8");
    const Cochain& F = spec.F;
    Mask d = spec.dim();
    Scalar one(1);
    for (Mask x = 0; x < d; ++x)
        for (Mask y = 0; y < d; ++y)
            for (Mask z = 0; z < d; ++z) {
                Scalar rzy = braiding(F, z, y);
                Scalar lhs1 = coboundary3(F, x, y, z) + rzy * coboundary3(F, x, z, y);
                if (lhs1 != one + rzy) return {false, {{x, y, z}}};
                Scalar ryx = braiding(F, y, x);
                Scalar lhs2 = coboundary3(F, x, y, z).inverse() +
                              ryx * coboundary3(F, y, x, z).inverse();
                if (lhs2 != one + ryx) return {false, {{x, y, z}}};
            }
    return {true, std::nullopt};
}

bool alternativity_condition_ii(const GradedSpec& spec) {
    Mask d = spec.dim();
    for (Mask x = 0; x < d; ++x)
        for (Mask y = 0; y < d; ++y)
            for (Mask z = 0; z < d; ++z) {
                if (coboundary3(spec.F, x, y, z).is_one()) continue;
                if (!(spec.s[x].is_one() && spec.s[y].is_one() && spec.s[z].is_one()))
                    return false;
            }
    return true;
}

GradedSpec iterate_from_field(const std::vector<int>& epsilons) {
    // Z_2-exponent tables grown a generator at a time.
    std::vector<std::uint8_t> f{0};  // f(0,0) = 0 on Z_2^0
    std::vector<std::uint8_t> xi{0};
    Mask d = 1;
    for (int eps : epsilons) {
        Mask dbar = d << 1;
        std::vector<std::uint8_t> fb(size_t(dbar) * dbar);
        std::vector<std::uint8_t> xib(dbar);
        for (Mask xb = 0; xb < dbar; ++xb) {
            Mask x = xb & (d - 1);
            int a = (xb & d) ? 1 : 0;
            xib[xb] = std::uint8_t(xi[x] ^ a);
            for (Mask yb = 0; yb < dbar; ++yb) {
                Mask y = yb & (d - 1);
                int b = (yb & d) ? 1 : 0;
                int bit = f[size_t(x) * d + y] ^ (((b & eps) ^ xi[y]) & a);
                fb[size_t(xb) * dbar + yb] = std::uint8_t(bit);
            }
        }
        f = std::move(fb);
        xi = std::move(xib);
        d = dbar;
    }
    int n = static_cast<int>(epsilons.size());
    std::vector<Scalar> s(d);
    for (Mask x = 0; x < d; ++x) s[x] = xi[x] ? Scalar(-1) : Scalar(1);
    GradedSpec spec = GradedSpec::make(Cochain::sign_form(n, std::move(f)), std::move(s));
    spec.xi = std::move(xi);
    return spec;
}

bool Rep::relations_hold(std::string* why) const {
    if (gens.size() != q.size()) {
        if (why) *why = "generator/square count mismatch";
        return false;
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].rows() != dim || gens[i].cols() != dim) {
            if (why) *why = "generator matrix has wrong shape";
            return false;
        }
        if (gens[i] * gens[i] != q[i] * Mat::identity(dim)) {
            if (why) *why = "generator " + std::to_string(i + 1) + " square != q_i";
            return false;
        }
        for (size_t j = 0; j < i; ++j)
            if (!(gens[i] * gens[j] + gens[j] * gens[i]).is_zero()) {
                if (why)
                    *why = "generators " + std::to_string(j + 1) + "," +
                           std::to_string(i + 1) + " do not anticommute";
                return false;
            }
    }
    return true;
}

namespace {

// Rows of the linear system "M commutes (sign = +1) or intertwines the
// sigma-conjugate (sign = -1) with every generator", unknowns = entries
// of M in row-major order.
Mat build_commutation_system(const Rep& rep, int sign) {
    int d = rep.dim;
    int vars = d * d;
    Mat sys(static_cast<int>(rep.gens.size()) * vars, vars);
    int row = 0;
    for (const Mat& g : rep.gens) {
        // M g - sign * g M = 0, entry (r, c)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c, ++row)
                for (int k = 0; k < d; ++k) {
                    sys.at(row, r * d + k) += g.at(k, c);
                    sys.at(row, k * d + c) -= Scalar(sign) * g.at(r, k);
                }
    }
    return sys;
}

Mat reshape(const std::vector<Scalar>& v, int d) {
    Mat m(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = v[size_t(r) * d + c];
    return m;
}

}  // namespace

int commutant_dimension(const Rep& rep) {
    if (rep.gens.empty()) return rep.dim * rep.dim;
    return static_cast<int>(nullspace(build_commutation_system(rep, 1)).size());
}

ExtendResult rep_extend(const Rep& rep, const Scalar& desired_q) {
    std::string why;
    if (!rep.relations_hold(&why))
        throw error("rep_extend: input is not a representation: " + why);
    if (desired_q.is_zero()) throw error("rep_extend: q must be nonzero");

    int d = rep.dim;

    // Intertwiner phi with phi a = sigma(a) phi, i.e. phi g = -g phi.
    std::optional<Mat> intertwiner;
    if (rep.gens.empty()) {
        intertwiner = Mat::identity(d);
    } else {
        auto basis = nullspace(build_commutation_system(rep, -1));
        for (const auto& v : basis) {
            Mat cand = reshape(v, d);
            if (inverse(cand)) {
                intertwiner = std::move(cand);
                break;
            }
        }
    }

    if (intertwiner) {
        // Normalize: first nonzero entry -> 1; phi^2 is a central scalar.
        Mat phi = *intertwiner;
        for (const auto& e : phi.data())
            if (!e.is_zero()) {
                phi = e.inverse() * phi;
                break;
            }
        auto sq = (phi * phi).as_scalar_multiple_of_identity();
        if (!sq) throw error("intertwiner square is not scalar (rep not irreducible?)");
        Scalar q_used = *sq;
        if (q_used != desired_q) {
            if (auto lam = gaussian_sqrt(desired_q / q_used)) {
                phi = *lam * phi;
                q_used = desired_q;
            }
        }
        Rep out = rep;
        out.gens.push_back(std::move(phi));
        out.q.push_back(q_used);
        return {std::move(out), false, q_used};
    }

    // W not isomorphic to W_sigma: double to W + W.
    Rep out;
    out.dim = 2 * d;
    for (size_t i = 0; i < rep.gens.size(); ++i) {
        Mat g(2 * d, 2 * d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                g.at(r, c) = rep.gens[i].at(r, c);
                g.at(d + r, d + c) = -rep.gens[i].at(r, c);
            }
        out.gens.push_back(std::move(g));
        out.q.push_back(rep.q[i]);
    }
    Mat v(2 * d, 2 * d);
    for (int r = 0; r < d; ++r) {
        v.at(r, d + r) = Scalar(1);
        v.at(d + r, r) = desired_q;
    }
    out.gens.push_back(std::move(v));
    out.q.push_back(desired_q);
    return {std::move(out), true, desired_q};
}

}  // namespace kfg
