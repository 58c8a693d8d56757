#include "kfg/parse.hpp"

#include <cctype>
#include <string>

namespace kfg {
namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& src) : s(src) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw error("parse error at position " + std::to_string(pos) + ": " + what);
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    // Unsigned integer.
    unsigned long long integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a number");
        unsigned long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + static_cast<unsigned long long>(s[pos++] - '0');
        return v;
    }

    // A rational literal a or a/b, with optional trailing 'i'; or a
    // parenthesized full scalar. Also bare "i".
    Scalar scalar_factor() {
        skip_ws();
        if (eat('(')) {
            std::size_t start = pos;
            int depth = 1;
            while (pos < s.size() && depth > 0) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') --depth;
                ++pos;
            }
            if (depth != 0) fail("unbalanced parenthesis");
            return Scalar::parse(s.substr(start, pos - 1 - start));
        }
        if (peek() == 'i') {
            ++pos;
            return Scalar::i();
        }
        unsigned long long num = integer();
        unsigned long long den = 1;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        Scalar v(Rational(static_cast<long long>(num), static_cast<long long>(den)));
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            v = v * Scalar::i();
        }
        return v;
    }
};

// A factor is a scalar literal, a generator eK, or the identity token 1
// (disambiguated from a number by the absence of an 'e' prefix: bare 1 is
// just the scalar 1, which doubles as the identity blade).
Multivector mv_factor(Lexer& lx, const AlgebraPtr& alg) {
    lx.skip_ws();
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == 'e' && lx.pos + 1 < lx.s.size() &&
        std::isdigit(static_cast<unsigned char>(lx.s[lx.pos + 1]))) {
        ++lx.pos;
        unsigned long long k = lx.integer();
        if (k < 1 || k > static_cast<unsigned long long>(alg->n()))
            lx.fail("generator index out of range: e" + std::to_string(k));
        return Multivector::blade(alg, Mask{1} << (k - 1));
    }
    return Multivector::scalar(alg, lx.scalar_factor());
}

Multivector mv_term(Lexer& lx, const AlgebraPtr& alg) {
    Multivector v = mv_factor(lx, alg);
    while (lx.eat('*')) v = v * mv_factor(lx, alg);
    return v;
}

struct SpinorFactor {
    Poly poly = Poly::term(Monomial{}, Scalar::one());
    Mask blade = 0;
    Scalar coeff = Scalar::one();
};

// Within a spinor term every factor is a scalar, a variable power, or a
// quaternion unit; unit products fold through the C(0,2) cochain.
void sp_factor(Lexer& lx, SpinorFactor& acc) {
    lx.skip_ws();
    if (lx.pos + 1 < lx.s.size() && (lx.s[lx.pos] == 'x' || lx.s[lx.pos] == 'e') &&
        std::isdigit(static_cast<unsigned char>(lx.s[lx.pos + 1]))) {
        char kind = lx.s[lx.pos];
        ++lx.pos;
        unsigned long long k = lx.integer();
        if (kind == 'x') {
            if (k < 1 || k > 4) lx.fail("variable index out of range: x" + std::to_string(k));
            unsigned long long p = 1;
            if (lx.eat('^')) p = lx.integer();
            Monomial m{};
            m.e[k - 1] = static_cast<unsigned>(p);
            acc.poly = acc.poly * Poly::term(m, Scalar::one());
        } else {
            if (k < 1 || k > 3) lx.fail("component out of range: e" + std::to_string(k));
            Mask b = static_cast<Mask>(k);  // e1=1, e2=2, e3=3 (= e1*e2)
            const auto& alg = quaternion_algebra();
            acc.coeff = acc.coeff * alg->cochain()(acc.blade, b);
            acc.blade ^= b;
        }
        return;
    }
    acc.coeff = acc.coeff * lx.scalar_factor();
}

PolySpinor sp_term(Lexer& lx) {
    SpinorFactor acc;
    sp_factor(lx, acc);
    while (lx.eat('*')) sp_factor(lx, acc);
    return PolySpinor::component(acc.blade, acc.coeff * acc.poly);
}

}  // namespace

Multivector parse_multivector(const std::string& src, AlgebraPtr alg) {
    Lexer lx(src);
    bool neg = lx.eat('-');
    if (!neg) lx.eat('+');
    Multivector v = mv_term(lx, alg);
    if (neg) v = -Scalar::one() * v;
    while (!lx.done()) {
        if (lx.eat('+')) {
            v = v + mv_term(lx, alg);
        } else if (lx.eat('-')) {
            v = v - mv_term(lx, alg);
        } else {
            lx.fail("expected '+' or '-'");
        }
    }
    return v;
}

PolySpinor parse_spinor(const std::string& src) {
    Lexer lx(src);
    bool neg = lx.eat('-');
    if (!neg) lx.eat('+');
    PolySpinor v = sp_term(lx);
    if (neg) v = -Scalar::one() * v;
    while (!lx.done()) {
        if (lx.eat('+')) {
            v = v + sp_term(lx);
        } else if (lx.eat('-')) {
            v = v - sp_term(lx);
        } else {
            lx.fail("expected '+' or '-'");
        }
    }
    return v;
}

}  // namespace kfg
