#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfg/dirac.hpp"
#include "kfg/parse.hpp"

using namespace kfg;

namespace {

Poly mono(unsigned a, unsigned b, unsigned c, unsigned d, Scalar coeff = Scalar::one()) {
    return Poly::term(Monomial{{a, b, c, d}}, coeff);
}

}  // namespace

TEST_CASE("polynomial arithmetic and derivatives") {
    Poly p = mono(2, 0, 0, 0) + mono(0, 1, 1, 0, Scalar(3));
    CHECK(p.d(1) == mono(1, 0, 0, 0, Scalar(2)));
    CHECK(p.d(2) == mono(0, 0, 1, 0, Scalar(3)));
    CHECK(p.d(4) == Poly::zero());
    CHECK(p * mono(1, 0, 0, 0) == mono(3, 0, 0, 0) + mono(1, 1, 1, 0, Scalar(3)));
    Poly q = mono(0, 0, 0, 0, Scalar(Rational(1, 2), Rational(1)));
    CHECK(q.conj() == mono(0, 0, 0, 0, Scalar(Rational(1, 2), Rational(-1))));
}

TEST_CASE("the coefficient algebra is the quaternions") {
    auto a = quaternion_algebra();
    CHECK(a->signature().str() == "--");
    PolySpinor e1 = PolySpinor::component(1, mono(0, 0, 0, 0));
    PolySpinor e2 = PolySpinor::component(2, mono(0, 0, 0, 0));
    CHECK(e1.left_mul_blade(1) ==
          PolySpinor::component(0, mono(0, 0, 0, 0, Scalar(-1))));
    CHECK(e2.left_mul_blade(1) == PolySpinor::component(3, mono(0, 0, 0, 0)));
}

TEST_CASE("first-order images") {
    // D(x1 * 1) = e1; D(x2 * 1) = e2; D(x3 * 1) = i e1; D(x4 * 1) = i e2.
    auto one = [](int c, Scalar s = Scalar::one()) {
        return PolySpinor::component(c, mono(0, 0, 0, 0, s));
    };
    CHECK(dirac_apply(PolySpinor::component(0, mono(1, 0, 0, 0))) == one(1));
    CHECK(dirac_apply(PolySpinor::component(0, mono(0, 1, 0, 0))) == one(2));
    CHECK(dirac_apply(PolySpinor::component(0, mono(0, 0, 1, 0))) == one(1, Scalar::i()));
    CHECK(dirac_apply(PolySpinor::component(0, mono(0, 0, 0, 1))) == one(2, Scalar::i()));
    // On the e1 component the i d3 term flips sign.
    CHECK(dirac_apply(PolySpinor::component(1, mono(0, 0, 1, 0))) ==
          PolySpinor::component(0, mono(0, 0, 0, 0, Scalar::i())));
}

TEST_CASE("square is minus the Laplacian") {
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; a + b <= 2; ++b)
            for (int comp = 0; comp < 4; ++comp) {
                PolySpinor psi = PolySpinor::component(comp, mono(a, b, 2 - a - b, 0));
                CHECK(dirac_apply(dirac_apply(psi)) == -Scalar::one() * laplacian(psi));
            }
    PolySpinor mixed = PolySpinor::component(0, mono(1, 1, 1, 0)) +
                       PolySpinor::component(3, mono(0, 2, 0, 1, Scalar::i()));
    CHECK(dirac_apply(dirac_apply(mixed)) == -Scalar::one() * laplacian(mixed));
}

TEST_CASE("the three operator forms agree") {
    PolySpinor psi = PolySpinor::component(0, mono(2, 1, 0, 0)) +
                     PolySpinor::component(1, mono(0, 1, 1, 0, Scalar(2))) +
                     PolySpinor::component(2, mono(1, 0, 0, 1, Scalar::i())) +
                     PolySpinor::component(3, mono(0, 0, 2, 1, Scalar(Rational(-1, 3))));
    PolySpinor d = dirac_apply(psi);
    CHECK(d == dirac_component_form(psi));
    CHECK(d == dirac_curl_form(psi));
}

TEST_CASE("parsed spinors feed the operator") {
    PolySpinor psi = parse_spinor("x1^2*e1 + 2*x2*x4 - 1/2*x3*e3");
    PolySpinor direct = PolySpinor::component(1, mono(2, 0, 0, 0)) +
                        PolySpinor::component(0, mono(0, 1, 0, 1, Scalar(2))) +
                        PolySpinor::component(3, mono(0, 0, 1, 0, Scalar(Rational(-1, 2))));
    CHECK(psi == direct);
    CHECK(dirac_apply(psi) == dirac_curl_form(psi));
}
