#include "kfg/cochain.hpp"

#include <algorithm>
#include <sstream>

namespace kfg {

Signature::Signature(std::vector<Scalar> values) : q(std::move(values)) {
    if (static_cast<int>(q.size()) > kMaxDim)
        throw error("signature longer than the supported dimension");
    for (const auto& qi : q)
        if (qi.is_zero()) throw error("signature entry q_i = 0");
}

bool Signature::all_pm1() const {
    return std::ranges::all_of(
        q, [](const Scalar& s) { return s == Scalar(1) || s == Scalar(-1); });
}

Mask Signature::neg_mask() const {
    Mask m = 0;
    for (size_t i = 0; i < q.size(); ++i)
        if (q[i] == Scalar(-1)) m |= Mask{1} << i;
    return m;
}

Signature Signature::negated() const {
    Signature out;
    for (const auto& qi : q) out.q.push_back(-qi);
    return out;
}

Signature concat(const Signature& a, const Signature& b) {
    Signature out = a;
    out.q.insert(out.q.end(), b.q.begin(), b.q.end());
    return out;
}

Signature Signature::parse(const std::string& src) {
    std::vector<Scalar> q;
    if (src.find(',') == std::string::npos &&
        src.find_first_not_of("+-") == std::string::npos) {
        for (char c : src) q.push_back(c == '+' ? Scalar(1) : Scalar(-1));
        return Signature(std::move(q));
    }
    if (src.empty()) return Signature{};
    std::stringstream ss(src);
    std::string item;
    while (std::getline(ss, item, ',')) q.push_back(Scalar::parse(item));
    return Signature(std::move(q));
}

std::string Signature::str() const {
    if (all_pm1()) {
        std::string s;
        for (const auto& qi : q) s += qi == Scalar(1) ? '+' : '-';
        return s;
    }
    std::string s;
    for (size_t i = 0; i < q.size(); ++i) {
        if (i) s += ',';
        s += q[i].str();
    }
    return s;
}

Cochain Cochain::clifford(Signature sig) {
    Cochain c(Kind::Clifford, sig.n());
    c.sig_pm1_ = sig.all_pm1();
    if (c.sig_pm1_) c.neg_mask_ = sig.neg_mask();
    c.sig_ = std::move(sig);
    return c;
}

Cochain Cochain::sign_form(int n, std::vector<std::uint8_t> f) {
    if (n > kMaxDim) throw error("sign cochain dimension too large");
    Mask d = Mask{1} << n;
    if (f.size() != size_t(d) * d) throw error("sign table has wrong size");
    for (Mask x = 0; x < d; ++x)
        if (f[size_t(x) * d] || f[x])
            throw error("sign cochain not normalized: F(x,0)=F(0,y)=1 required");
    Cochain c(Kind::Sign, n);
    c.bits_ = std::move(f);
    return c;
}

Cochain Cochain::table(int n, std::vector<Scalar> values) {
    if (n > 12) throw error("table cochain capped at n <= 12");
    Mask d = Mask{1} << n;
    if (values.size() != size_t(d) * d) throw error("cochain table has wrong size");
    for (const auto& v : values)
        if (v.is_zero()) throw error("cochain must be nowhere zero");
    for (Mask x = 0; x < d; ++x)
        if (!values[size_t(x) * d].is_one() || !values[x].is_one())
            throw error("cochain not normalized: F(x,0)=F(0,y)=1 required");
    Cochain c(Kind::Table, n);
    c.table_pm1_ = std::ranges::all_of(values, [](const Scalar& s) {
        return s == Scalar(1) || s == Scalar(-1);
    });
    c.values_ = std::move(values);
    return c;
}

void Cochain::check_args(Mask x, Mask y) const {
    if (x >= size() || y >= size())
        throw error("group element out of range for this cochain");
}

Scalar Cochain::operator()(Mask x, Mask y) const {
    check_args(x, y);
    switch (kind_) {
        case Kind::Clifford: {
            Scalar v = reorder_parity(x, y) ? Scalar(-1) : Scalar(1);
            Mask common = x & y;
            while (common) {
                int i = std::countr_zero(common);
                common &= common - 1;
                v *= sig_.q[i];
            }
            return v;
        }
        case Kind::Sign:
            return bits_[size_t(x) * size() + y] ? Scalar(-1) : Scalar(1);
        case Kind::Table:
            return values_[size_t(x) * size() + y];
    }
    throw error("unreachable cochain kind");
}

bool Cochain::pm1_valued() const {
    switch (kind_) {
        case Kind::Clifford: return sig_pm1_;
        case Kind::Sign: return true;
        case Kind::Table: return table_pm1_;
    }
    return false;
}

int Cochain::sign_bit(Mask x, Mask y) const {
    switch (kind_) {
        case Kind::Clifford:
            return reorder_parity(x, y) ^ (dot_count(x & neg_mask_, y) & 1);
        case Kind::Sign:
            return bits_[size_t(x) * size() + y];
        case Kind::Table:
            return values_[size_t(x) * size() + y] == Scalar(-1) ? 1 : 0;
    }
    return 0;
}

const Signature& Cochain::signature() const {
    if (kind_ != Kind::Clifford) throw error("cochain has no signature");
    return sig_;
}

const std::vector<std::uint8_t>& Cochain::sign_table() const {
    if (kind_ != Kind::Sign) throw error("cochain has no sign table");
    return bits_;
}

bool pointwise_equal(const Cochain& a, const Cochain& b) {
    if (a.n() != b.n()) return false;
    for (Mask x = 0; x < a.size(); ++x)
        for (Mask y = 0; y < a.size(); ++y)
            if (a(x, y) != b(x, y)) return false;
    return true;
}

Scalar coboundary3(const Cochain& F, Mask x, Mask y, Mask z) {
    return F(x, y) * F(x ^ y, z) / (F(y, z) * F(x, y ^ z));
}

int coboundary3_sign(const Cochain& F, Mask x, Mask y, Mask z) {
    return F.sign_bit(x, y) ^ F.sign_bit(x ^ y, z) ^ F.sign_bit(y, z) ^
           F.sign_bit(x, y ^ z);
}

Scalar braiding(const Cochain& F, Mask x, Mask y) {
    return F(x, y) / F(y, x);
}

bool is_cocycle(const Cochain& F) {
    if (F.n() > 12) throw error("too large for exhaustive cocycle check (n > 12)");
    Mask d = F.size();
    if (F.pm1_valued()) {
        for (Mask x = 0; x < d; ++x)
            for (Mask y = 0; y < d; ++y)
                for (Mask z = 0; z < d; ++z)
                    if (coboundary3_sign(F, x, y, z)) return false;
        return true;
    }
    for (Mask x = 0; x < d; ++x)
        for (Mask y = 0; y < d; ++y)
            for (Mask z = 0; z < d; ++z)
                if (!coboundary3(F, x, y, z).is_one()) return false;
    return true;
}

Scalar character_coboundary(const std::vector<Scalar>& s, Mask x, Mask y) {
    if (x >= s.size() || y >= s.size() || (x ^ y) >= s.size())
        throw error("group element out of range for grading function");
    if (!s[0].is_one()) throw error("grading function must have s(0) = 1");
    for (Mask m : {x, y, Mask(x ^ y)})
        if (s[m].is_zero()) throw error("grading function must be nowhere zero");
    return s[x] * s[y] / s[x ^ y];
}

}  // namespace kfg
