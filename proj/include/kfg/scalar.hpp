#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace kfg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error type for all domain failures (division by zero, dimension
/// mismatches, out-of-range constructions).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An element of Q(i): re + im*i with exact rational parts.
/// Values are immutable in spirit; every operation returns a new value.
/// cpp_rational keeps numerator/denominator coprime with positive
/// denominator, so structural equality is canonical equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT: implicit on purpose
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// i^k for any integer k (negative allowed), reduced mod 4.
    static Scalar i_power(long long k);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_,
                      a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// Multiplicative inverse; throws kfg::error on zero.
    Scalar inverse() const;

    /// |z|^2 = z * conj(z), a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Lexicographic order on (re, im); used only for deterministic output.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical textual form "a/b+c/di" with optional parts,
    /// e.g. "1", "-1/2i", "3/2+1i".
    std::string str() const;

    /// Parses the str() grammar exactly (plus bare "i"/"-i").
    /// Throws kfg::error with a position on malformed input.
    static Scalar parse(const std::string& src);

private:
    Rational re_;
    Rational im_;
};

/// Square root in Q(i) if one exists.
std::optional<Scalar> gaussian_sqrt(const Scalar& z);

}  // namespace kfg
