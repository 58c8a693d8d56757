#include "kfg/scalar.hpp"

#include <cctype>

namespace kfg {

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw error("division by zero scalar");
    // a / b = a * conj(b) / |b|^2
    Rational n = b.norm();
    Scalar num = a * b.conj();
    return Scalar(num.re() / n, num.im() / n);
}

Scalar Scalar::inverse() const {
    return Scalar::one() / *this;
}

Scalar Scalar::i_power(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return one();
        case 1: return i();
        case 2: return -one();
        default: return -i();
    }
}

namespace {

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

struct Scanner {
    const std::string& src;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw error("scalar parse error at position " + std::to_string(pos) +
                    ": " + what + " in \"" + src + "\"");
    }
    bool eof() const { return pos >= src.size(); }
    char peek() const { return eof() ? '\0' : src[pos]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(src.substr(start, pos - start));
    }

    Rational rational(bool negative) {
        Integer num = integer();
        Integer den = 1;
        if (peek() == '/') {
            ++pos;
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        return negative ? -r : r;
    }
};

}  // namespace

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string s;
    if (re_ != 0) {
        s = rational_str(re_);
        if (im_ > 0) s += "+";
    }
    s += rational_str(im_) + "i";
    return s;
}

Scalar Scalar::parse(const std::string& src) {
    Scanner sc{src};
    sc.skip_ws();
    if (sc.eof()) sc.fail("empty input");

    auto part = [&sc]() -> std::pair<Rational, bool> {
        bool neg = false;
        if (sc.peek() == '+' || sc.peek() == '-') {
            neg = sc.peek() == '-';
            ++sc.pos;
            sc.skip_ws();
        }
        // bare "i" / "-i"
        if (sc.peek() == 'i') {
            ++sc.pos;
            return {neg ? Rational(-1) : Rational(1), true};
        }
        Rational r = sc.rational(neg);
        bool imag = false;
        if (sc.peek() == 'i') {
            ++sc.pos;
            imag = true;
        }
        return {r, imag};
    };

    Rational re, im;
    auto [first, first_imag] = part();
    (first_imag ? im : re) = first;
    sc.skip_ws();
    if (!sc.eof()) {
        if (first_imag) sc.fail("imaginary part must come last");
        if (sc.peek() != '+' && sc.peek() != '-') sc.fail("expected '+' or '-'");
        auto [second, second_imag] = part();
        if (!second_imag) sc.fail("expected imaginary part");
        im = second;
        sc.skip_ws();
        if (!sc.eof()) sc.fail("trailing input");
    }
    return Scalar(re, im);
}

namespace {

// sqrt of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = numerator(r), den = denominator(r);
    Integer sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace

std::optional<Scalar> gaussian_sqrt(const Scalar& z) {
    if (z.is_zero()) return Scalar::zero();
    if (z.is_real()) {
        if (auto r = rational_sqrt(z.re())) return Scalar(*r);
        if (auto r = rational_sqrt(-z.re())) return Scalar(Rational(0), *r);
        return std::nullopt;
    }
    // (x + yi)^2 = z requires |z| to be a rational square, then
    // x^2 = (re + |z|)/2 must be one too.
    auto n = rational_sqrt(z.norm());
    if (!n) return std::nullopt;
    auto x2 = (z.re() + *n) / 2;
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = z.im() / (2 * *x);
    Scalar root(*x, y);
    if (root * root != z) return std::nullopt;
    return root;
}

}  // namespace kfg
