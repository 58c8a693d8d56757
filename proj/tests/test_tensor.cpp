#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfg/tensor.hpp"

using namespace kfg;

TEST_CASE("structure constants of a twisted algebra") {
    auto a = make_clifford("--");
    StructAlgebra s = to_struct(*a);
    CHECK(s.dim == 4);
    // e1 * e2 = e3 and e2 * e1 = -e3.
    CHECK(s.sc(1, 2, 3) == Scalar(1));
    CHECK(s.sc(2, 1, 3) == Scalar(-1));
    CHECK(s.sc(1, 1, 0) == Scalar(-1));
    std::vector<Scalar> u = {Scalar(0), Scalar(1), Scalar(0), Scalar(0)};
    std::vector<Scalar> v = {Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
    auto p = s.mul(u, v);
    CHECK(p[3] == Scalar(1));
    CHECK(p[0] == Scalar(0));
}

TEST_CASE("ordinary tensor dimensions and units") {
    auto a = to_struct(*make_clifford("+"));
    auto b = to_struct(*make_clifford("--"));
    auto t = ordinary_tensor(a, b);
    CHECK(t.dim == 8);
    auto u = t.mul(t.unit, t.unit);
    CHECK(u == t.unit);
}

TEST_CASE("super tensor equals the combined Clifford algebra") {
    for (const char* sa : {"+", "-", "+-"})
        for (const char* sb : {"+", "--", "-+"}) {
            auto A = make_clifford(sa);
            auto B = make_clifford(sb);
            Algebra t = super_tensor(*A, *B);
            Cochain whole = Cochain::clifford(concat(A->signature(), B->signature()));
            CHECK(pointwise_equal(t.cochain(), whole));
        }
}

TEST_CASE("periodicity twist") {
    // C(2,0) factor: mu = -q1 q2 = -1, so the twist flips odd overlaps.
    Signature factor = Signature::parse("++");
    Cochain F = Cochain::clifford(Signature::parse("+-"));
    Cochain Fp = periodicity_twist(F, factor);
    for (Mask x = 0; x < 4; ++x)
        for (Mask y = 0; y < 4; ++y)
            CHECK(Fp(x, y) == (dot(x, y) ? -F(x, y) : F(x, y)));
    // The twisted cochain is the Clifford form of the negated signature.
    CHECK(pointwise_equal(Fp, Cochain::clifford(Signature::parse("-+"))));
    // C(1,1) factor: mu = +1, no twist.
    Cochain same = periodicity_twist(F, Signature::parse("+-"));
    CHECK(pointwise_equal(same, F));
}

TEST_CASE("periodicity isomorphism is multiplicative") {
    CHECK(periodicity_iso_check(*make_clifford("+-"), *make_clifford("++")));
    CHECK(periodicity_iso_check(*make_clifford("---"), *make_clifford("--")));
    CHECK(periodicity_iso_check(*make_clifford(""), *make_clifford("-+-+")));
    CHECK(periodicity_iso_check(*make_clifford(Signature::parse("2,-3")),
                                *make_clifford("++")));
}

TEST_CASE("center of a twisted group algebra") {
    // C(0,2): central only in degree 0.
    auto z2 = center_basis(to_struct(*make_clifford("--")));
    CHECK(z2.size() == 1);
    // C(0,3): 1 and the top blade are central.
    auto z3 = center_basis(to_struct(*make_clifford("---")));
    CHECK(z3.size() == 2);
}

TEST_CASE("labels for small Clifford algebras") {
    CHECK(classify(*make_clifford("")).label.str() == "M_1");
    CHECK(classify(*make_clifford("+")).label.str() == "M_1+M_1");
    CHECK(classify(*make_clifford("-")).label.str() == "M_1+M_1");
    CHECK(classify(*make_clifford("--")).label.str() == "M_2");
    CHECK(classify(*make_clifford("++")).label.str() == "M_2");
    CHECK(classify(*make_clifford("+-")).label.str() == "M_2");
    CHECK(classify(*make_clifford("---")).label.str() == "M_2+M_2");
    CHECK(classify(*make_clifford("++++")).label.str() == "M_4");
    auto odd = classify(*make_clifford("+++"));
    CHECK(odd.label.str() == "M_2+M_2");
    REQUIRE(odd.mu.has_value());
    CHECK(*odd.mu == Scalar(-1));
    // Non-sign signatures are out of scope for the classifier.
    CHECK(classify(*make_clifford(Signature::parse("2"))).label.kind ==
          AlgebraLabel::Kind::Unclassified);
}

TEST_CASE("generic structure classification") {
    // H (x) H over Q(i) is M_4: the ordinary tensor of two split
    // quaternion algebras.
    auto h = to_struct(*make_clifford("--"));
    auto label = classify(ordinary_tensor(h, h));
    CHECK(label.str() == "M_4");
}

TEST_CASE("periodicity table") {
    auto rep = periodicity_table_check();
    CHECK(!rep.items.empty());
    for (const auto& item : rep.items) {
        INFO(item.name, ": ", item.detail);
        CHECK(item.pass);
    }
    CHECK(rep.all_pass());
}
