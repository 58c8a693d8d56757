#include "kfg/dirac.hpp"

namespace kfg {

Poly Poly::term(Monomial m, Scalar c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

void Poly::add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.t_) out.add_term(m, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.t_) out.add_term(m, -c);
    return out;
}

Poly operator*(const Scalar& c, const Poly& a) {
    Poly out;
    for (const auto& [m, v] : a.t_) out.add_term(m, c * v);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            Monomial m = ma;
            for (int i = 0; i < 4; ++i) m.e[size_t(i)] += mb.e[size_t(i)];
            out.add_term(m, ca * cb);
        }
    return out;
}

Poly Poly::d(int a) const {
    if (a < 1 || a > 4) throw error("derivative direction must be 1..4");
    Poly out;
    for (const auto& [m, c] : t_) {
        unsigned k = m.e[size_t(a - 1)];
        if (k == 0) continue;
        Monomial lower = m;
        --lower.e[size_t(a - 1)];
        out.add_term(lower, Scalar(long(k)) * c);
    }
    return out;
}

Poly Poly::conj() const {
    Poly out;
    for (const auto& [m, c] : t_) out.add_term(m, c.conj());
    return out;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < 4; ++i) {
            unsigned k = m.e[size_t(i)];
            if (!k) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (k > 1) mono += "^" + std::to_string(k);
        }
        std::string cs = c.str();
        bool paren = c.re() != 0 && c.im() != 0;
        if (mono.empty())
            out += paren ? "(" + cs + ")" : cs;
        else if (c.is_one())
            out += mono;
        else
            out += (paren ? "(" + cs + ")" : cs) + "*" + mono;
    }
    return out;
}

const CliffordPtr& quaternion_algebra() {
    static const CliffordPtr alg =
        make_clifford(Signature({std::vector<Scalar>{Scalar(-1), Scalar(-1)}}));
    return alg;
}

PolySpinor PolySpinor::component(int blade_mask, Poly p) {
    if (blade_mask < 0 || blade_mask > 3) throw error("blade mask must be 0..3");
    PolySpinor s;
    s.c_[size_t(blade_mask)] = std::move(p);
    return s;
}

bool PolySpinor::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

PolySpinor operator+(const PolySpinor& a, const PolySpinor& b) {
    PolySpinor out;
    for (int k = 0; k < 4; ++k) out.c_[size_t(k)] = a.c_[size_t(k)] + b.c_[size_t(k)];
    return out;
}

PolySpinor operator-(const PolySpinor& a, const PolySpinor& b) {
    PolySpinor out;
    for (int k = 0; k < 4; ++k) out.c_[size_t(k)] = a.c_[size_t(k)] - b.c_[size_t(k)];
    return out;
}

PolySpinor operator*(const Scalar& s, const PolySpinor& a) {
    PolySpinor out;
    for (int k = 0; k < 4; ++k) out.c_[size_t(k)] = s * a.c_[size_t(k)];
    return out;
}

bool operator==(const PolySpinor& a, const PolySpinor& b) {
    for (int k = 0; k < 4; ++k)
        if (!(a.c_[size_t(k)] == b.c_[size_t(k)])) return false;
    return true;
}

PolySpinor PolySpinor::left_mul_blade(Mask b) const {
    const Cochain& F = quaternion_algebra()->cochain();
    PolySpinor out;
    for (Mask m = 0; m < 4; ++m) {
        if (c_[m].is_zero()) continue;
        out.c_[size_t(b ^ m)] = out.c_[size_t(b ^ m)] + F(b, m) * c_[m];
    }
    return out;
}

PolySpinor partial_derivative(const PolySpinor& psi, int a) {
    PolySpinor out;
    for (int k = 0; k < 4; ++k) out.comp(k) = psi.comp(k).d(a);
    return out;
}

PolySpinor dirac_apply(const PolySpinor& psi) {
    PolySpinor out;
    for (int m = 0; m < 4; ++m) {
        const Poly& p = psi.comp(m);
        if (p.is_zero()) continue;
        // e1 (d1 + i d3 (-1)^{m_1}) and e2 (d2 + i d4 (-1)^{m_2})
        Scalar s1 = (m & 1) ? -Scalar::i() : Scalar::i();
        Scalar s2 = (m & 2) ? -Scalar::i() : Scalar::i();
        PolySpinor t1 =
            PolySpinor::component(m, p.d(1)) + s1 * PolySpinor::component(m, p.d(3));
        PolySpinor t2 =
            PolySpinor::component(m, p.d(2)) + s2 * PolySpinor::component(m, p.d(4));
        out = out + t1.left_mul_blade(1) + t2.left_mul_blade(2);
    }
    return out;
}

namespace {

// nabla_1 = d1 + i d3, nabla_2 = d2 + i d4; bar versions use -i.
Poly nabla(int which, const Poly& p, bool bar) {
    Scalar im = bar ? -Scalar::i() : Scalar::i();
    if (which == 1) return p.d(1) + im * p.d(3);
    if (which == 2) return p.d(2) + im * p.d(4);
    return Poly::zero();  // nabla_3 = 0
}

}  // namespace

PolySpinor dirac_component_form(const PolySpinor& psi) {
    const Poly& p0 = psi.comp(0);
    const Poly& p1 = psi.comp(1);
    const Poly& p2 = psi.comp(2);
    const Poly& p3 = psi.comp(3);
    PolySpinor out;
    out.comp(0) = Poly::zero() - nabla(1, p1, true) - nabla(2, p2, true);
    out.comp(1) = nabla(1, p0, false) + nabla(2, p3, true);
    out.comp(2) = nabla(2, p0, false) - nabla(1, p3, true);
    out.comp(3) = nabla(1, p2, false) - nabla(2, p1, false);
    return out;
}

PolySpinor dirac_curl_form(const PolySpinor& psi) {
    // vec(psi) = (psi_1, psi_2, conj(psi_3)); vec of the output has its
    // third component conjugated back.
    std::array<Poly, 3> v{psi.comp(1), psi.comp(2), psi.comp(3).conj()};
    std::array<Poly, 3> vbar{v[0].conj(), v[1].conj(), v[2].conj()};

    PolySpinor out;
    // (D psi)_0 = -bar(nabla) . vec(psi)
    out.comp(0) =
        Poly::zero() - nabla(1, v[0], true) - nabla(2, v[1], true) - nabla(3, v[2], true);
    // vec(D psi) = nabla psi_0 + bar(nabla) x conj(vec(psi))
    std::array<Poly, 3> grad{nabla(1, psi.comp(0), false),
                             nabla(2, psi.comp(0), false),
                             nabla(3, psi.comp(0), false)};
    std::array<Poly, 3> curl{
        nabla(2, vbar[2], true) - nabla(3, vbar[1], true),
        nabla(3, vbar[0], true) - nabla(1, vbar[2], true),
        nabla(1, vbar[1], true) - nabla(2, vbar[0], true)};
    out.comp(1) = grad[0] + curl[0];
    out.comp(2) = grad[1] + curl[1];
    out.comp(3) = (grad[2] + curl[2]).conj();
    return out;
}

PolySpinor laplacian(const PolySpinor& psi) {
    PolySpinor out;
    for (int k = 0; k < 4; ++k) {
        Poly acc;
        for (int a = 1; a <= 4; ++a) acc = acc + psi.comp(k).d(a).d(a);
        out.comp(k) = acc;
    }
    return out;
}

std::string PolySpinor::str() const {
    static const char* names[4] = {"1", "e1", "e2", "e3"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[size_t(k)].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[size_t(k)].str() + ")*" + names[size_t(k)];
    }
    return out.empty() ? "0" : out;
}

}  // namespace kfg
