#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfg/clifford.hpp"

using namespace kfg;

TEST_CASE("theta sign by degree") {
    // (-1)^{k(k-1)/2} depends only on rho(x): + + - - + + - - ...
    CHECK(theta_sign(0b0) == 1);
    CHECK(theta_sign(0b1) == 1);
    CHECK(theta_sign(0b11) == -1);
    CHECK(theta_sign(0b111) == -1);
    CHECK(theta_sign(0b1111) == 1);
    CHECK(theta_sign(0b10110) == -1);
    CHECK(theta_sign(0b11111) == 1);
}

TEST_CASE("theta reverses products") {
    auto a = make_clifford("-+-");
    for (Mask x = 0; x < 8; ++x)
        for (Mask y = 0; y < 8; ++y) {
            auto ex = Multivector::blade(a, x), ey = Multivector::blade(a, y);
            CHECK(theta_involution(ex * ey) ==
                  theta_involution(ey) * theta_involution(ex));
        }
}

TEST_CASE("sigma negates odd blades") {
    auto a = make_clifford("++--");
    for (Mask x = 0; x < 16; ++x) {
        auto s = sigma_automorphism(Multivector::blade(a, x));
        CHECK(s.coeff(x) == Scalar(rho(x) % 2 ? -1 : 1));
    }
}

TEST_CASE("top blade squares") {
    CHECK(top_square(*make_clifford("++")) == Scalar(-1));
    CHECK(top_square(*make_clifford("--")) == Scalar(-1));
    CHECK(top_square(*make_clifford("+-")) == Scalar(1));
    CHECK(top_square(*make_clifford("+++")) == Scalar(-1));
    CHECK(top_square(*make_clifford("++++")) == Scalar(1));
    CHECK(top_square(*make_clifford(Signature::parse("2,3"))) == Scalar(-6));
    // Direct product oracle.
    for (const char* s : {"+", "-", "+-+", "----", "+-+-+"}) {
        auto a = make_clifford(s);
        auto g = Multivector::blade(a, a->gamma_mask());
        CHECK((g * g).as_scalar() == top_square(*a));
    }
}

TEST_CASE("basis inverses") {
    auto a = make_clifford(Signature::parse("2,-1,1/3"));
    auto one = Multivector::scalar(a, Scalar::one());
    for (Mask x = 0; x < 8; ++x) {
        auto inv = basis_inverse(a, x);
        CHECK(Multivector::blade(a, x) * inv == one);
        CHECK(inv * Multivector::blade(a, x) == one);
    }
}

TEST_CASE("lambda norm closed form") {
    auto a = make_clifford("--");
    // lambda(e_x) = (-1)^rho prod q^{x_i}: 1, 1, 1, -1... for q=(-1,-1):
    CHECK(lambda_norm(*a, 0) == Scalar(1));
    CHECK(lambda_norm(*a, 1) == Scalar(1));
    CHECK(lambda_norm(*a, 2) == Scalar(1));
    CHECK(lambda_norm(*a, 3) == Scalar(1));
    auto b = make_clifford("++");
    CHECK(lambda_norm(*b, 1) == Scalar(-1));
    CHECK(lambda_norm(*b, 3) == Scalar(1));
    for (Mask x = 0; x < 4; ++x) {
        auto ex = Multivector::blade(b, x);
        CHECK((ex * sigma_automorphism(theta_involution(ex))).as_scalar() ==
              lambda_norm(*b, x));
    }
}

TEST_CASE("adjoint action is diagonal with unit square") {
    auto a = make_clifford("+--");
    for (Mask x = 0; x < 8; ++x)
        for (Mask y = 0; y < 8; ++y) {
            auto img = adjoint_action(x, Multivector::blade(a, y));
            Scalar c = img.coeff(y);
            CHECK(img.coeffs().size() == 1);
            CHECK(c == Scalar((rho(x) * (rho(y) + 1) + dot_count(x, y)) % 2 ? -1 : 1));
            // Conjugation form.
            CHECK(img == sigma_automorphism(Multivector::blade(a, x)) *
                             Multivector::blade(a, y) * basis_inverse(a, x));
        }
}

TEST_CASE("commute sign matches the parity predicate") {
    auto a = make_clifford("-+-+");
    for (Mask x = 0; x < 16; ++x)
        for (Mask y = 0; y < 16; ++y) {
            int s = commute_sign(*a, x, y);
            CHECK(s == ((dot_count(x, y) + rho(x) * rho(y)) % 2 ? -1 : 1));
        }
}
