#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfg/spinor.hpp"
#include "kfg/tensor.hpp"

using namespace kfg;

TEST_CASE("two-sided action coefficient") {
    auto a = make_clifford("--");
    const Cochain& F = a->cochain();
    for (Mask x = 0; x < 4; ++x)
        for (Mask y = 0; y < 4; ++y)
            for (Mask z = 0; z < 4; ++z) {
                auto img = lr_action(x, y, z, a);
                Scalar want = F(x, y) * F(x ^ y, z) * Scalar(dot(y, z) ? -1 : 1) *
                              Scalar::i_power(rho(y));
                CHECK(img.coeff(x ^ y ^ z) == want);
                CHECK(img.coeffs().size() == 1);
            }
}

TEST_CASE("generator matrices satisfy the doubled relations") {
    for (const char* s : {"-", "+", "--", "+-", "-+-"}) {
        auto a = make_clifford(s);
        auto rep = spinor_rep(a);
        std::string why;
        INFO(why);
        CHECK(rep.relations_hold(&why));
        CHECK(int(rep.gens.size()) == 2 * a->n());
    }
}

TEST_CASE("left factor acts by left multiplication") {
    auto a = make_clifford("--");
    for (int i = 0; i < 2; ++i) {
        Mat m = lr_matrix(Mask{1} << i, 0, a);
        for (Mask z = 0; z < 4; ++z) {
            auto prod = Multivector::blade(a, Mask{1} << i) * Multivector::blade(a, z);
            for (Mask w = 0; w < 4; ++w)
                CHECK(m.at(int(w), int(z)) == prod.coeff(w));
        }
    }
}

TEST_CASE("right factor acts by graded right multiplication times i") {
    auto a = make_clifford("--");
    for (int i = 0; i < 2; ++i) {
        Mat m = lr_matrix(0, Mask{1} << i, a);
        for (Mask z = 0; z < 4; ++z) {
            auto prod = Multivector::blade(a, z) * Multivector::blade(a, Mask{1} << i);
            Scalar sign = Scalar(rho(z) % 2 ? -1 : 1);
            for (Mask w = 0; w < 4; ++w)
                CHECK(m.at(int(w), int(z)) == Scalar::i() * sign * prod.coeff(w));
        }
    }
}

TEST_CASE("faithfulness of the double representation") {
    CHECK(full_rep_faithfulness(make_clifford("")));
    CHECK(full_rep_faithfulness(make_clifford("-")));
    CHECK(full_rep_faithfulness(make_clifford("+-")));
    CHECK(full_rep_faithfulness(make_clifford("-+-")));
}

TEST_CASE("exterior model matches the twisted model") {
    for (const char* s : {"-", "+", "--", "++", "+-+"}) {
        auto a = make_clifford(s);
        auto gens = generator_matrices(a);
        for (int g = 1; g <= 2 * a->n(); ++g)
            CHECK(exterior_model_matrix(g, a) == gens[size_t(g - 1)]);
    }
}

TEST_CASE("grading operator") {
    auto a = make_clifford("--");
    auto g = grading_operator(a);
    // lambda = i^2 (-1)^1 (-1)(-1) = 1.
    CHECK(g.lambda == Scalar(1));
    for (Mask z = 0; z < 4; ++z) {
        CHECK(g.matrix.at(int(z), int(z)) == Scalar(rho(z) % 2 ? -1 : 1));
        for (Mask w = 0; w < 4; ++w)
            if (w != z) CHECK(g.matrix.at(int(w), int(z)) == Scalar(0));
    }
    auto b = make_clifford("+");
    // lambda = i^1 * 1 * 1 = i.
    CHECK(grading_operator(b).lambda == Scalar::i());
}

TEST_CASE("odd extension squares and anticommutes") {
    for (const char* s : {"-", "--", "+-"})
        for (int qs = 0; qs < 2; ++qs) {
            auto a = make_clifford(s);
            Scalar q(qs ? -1 : 1);
            auto gens = generator_matrices(a);
            Mat m = odd_extend(gens, a, q);
            CHECK((m * m).as_scalar_multiple_of_identity() == q);
            for (const auto& g : gens) CHECK((m * g + g * m).is_zero());
            auto rep = spinor_rep(a, q);
            CHECK(int(rep.gens.size()) == 2 * a->n() + 1);
            CHECK(commutant_dimension(rep) == 1);
        }
}
