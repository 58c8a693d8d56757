#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfg/process.hpp"

using namespace kfg;

namespace {

GradedSpec sign_perturbed_parent() {
    // A non-cocycle on Z_2^2: flip one sign in the C(+,+) table.
    Cochain F = Cochain::clifford(Signature::parse("++"));
    std::vector<std::uint8_t> bits;
    for (Mask x = 0; x < 4; ++x)
        for (Mask y = 0; y < 4; ++y) bits.push_back(std::uint8_t(F.sign_bit(x, y)));
    bits[size_t(1) * 4 + 1] ^= 1;
    Cochain P = Cochain::sign_form(2, bits);
    std::vector<Scalar> s = {Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)};
    return GradedSpec::make(P, s);
}

}  // namespace

TEST_CASE("one step doubles the group and extends the signature") {
    GradedSpec base = GradedSpec::clifford(Signature::parse("-"));
    GradedSpec bar = process_once(base, Scalar(-1));
    CHECK(bar.n() == 2);
    CHECK(pointwise_equal(bar.F, Cochain::clifford(Signature::parse("--"))));
    // The grading flips on the new generator.
    CHECK(bar.s[0] == Scalar(1));
    CHECK(bar.s[1] == Scalar(-1));
    CHECK(bar.s[2] == Scalar(-1));
    CHECK(bar.s[3] == Scalar(1));
}

TEST_CASE("step case split") {
    GradedSpec base = GradedSpec::clifford(Signature::parse("+-"));
    Scalar q(-1);
    GradedSpec bar = process_once(base, q);
    const Cochain& F = base.F;
    Mask v = 4;
    for (Mask x = 0; x < 4; ++x)
        for (Mask y = 0; y < 4; ++y) {
            CHECK(bar.F(x, y) == F(x, y));
            CHECK(bar.F(x, y | v) == F(x, y));
            CHECK(bar.F(x | v, y) == base.s[y] * F(x, y));
            CHECK(bar.F(x | v, y | v) == q * base.s[y] * F(x, y));
        }
}

TEST_CASE("grading properties") {
    GradedSpec g = GradedSpec::clifford(Signature::parse("+-+"));
    CHECK(g.s_pm1());
    CHECK(g.s_is_character());
    CHECK(g.s_involutive_character());
    std::vector<Scalar> s = {Scalar(1), Scalar::i(), Scalar(1), Scalar::i()};
    GradedSpec h = GradedSpec::make(Cochain::clifford(Signature::parse("++")), s);
    CHECK(!h.s_pm1());
    CHECK(!h.s_is_character());  // i * i != s(0)
}

TEST_CASE("closed forms match direct evaluation on a non-cocycle") {
    GradedSpec parent = sign_perturbed_parent();
    for (int qs = 0; qs < 2; ++qs) {
        GradedSpec bar = process_once(parent, Scalar(qs ? -1 : 1));
        for (Mask x = 0; x < 8; ++x)
            for (Mask y = 0; y < 8; ++y) {
                CHECK(closed_braiding(bar, x, y) == braiding(bar.F, x, y));
                for (Mask z = 0; z < 8; ++z)
                    CHECK(closed_associator(bar, x, y, z) == coboundary3(bar.F, x, y, z));
            }
    }
}

TEST_CASE("associativity preserved exactly for cocycle parents") {
    GradedSpec base = GradedSpec::clifford(Signature::parse("+-"));
    CHECK(associativity_preserved(base, Scalar(1)));
    CHECK(associativity_preserved(base, Scalar(-1)));
    GradedSpec bad = sign_perturbed_parent();
    CHECK(!is_cocycle(bad.F));
    CHECK(!associativity_preserved(bad, Scalar(1)));
}

TEST_CASE("alternativity bookkeeping") {
    GradedSpec base = GradedSpec::clifford(Signature::parse("++"));
    auto r = alternativity_check(base);
    CHECK(r.alternative);
    CHECK(!r.witness.has_value());
    // A cocycle parent has trivial associator, so condition (ii) holds
    // regardless of the grading.
    CHECK(alternativity_condition_ii(base));
    GradedSpec bad = sign_perturbed_parent();
    auto rb = alternativity_check(bad);
    if (!rb.alternative) CHECK(rb.witness.has_value());
}

TEST_CASE("iterating from the field gives the closed form") {
    for (std::vector<int> eps :
         {std::vector<int>{}, {0}, {1}, {0, 1}, {1, 1, 0}, {0, 1, 1, 0, 1}}) {
        GradedSpec got = iterate_from_field(eps);
        std::vector<Scalar> q;
        for (int e : eps) q.push_back(Scalar(e ? -1 : 1));
        Cochain want = Cochain::clifford(Signature(q));
        CHECK(pointwise_equal(got.F, want));
        REQUIRE(got.xi.has_value());
        for (Mask x = 0; x < got.dim(); ++x)
            CHECK(int((*got.xi)[size_t(x)]) == rho(x) % 2);
    }
}

TEST_CASE("representation relations") {
    Rep r;
    CHECK(r.dim == 1);
    CHECK(r.relations_hold());
    CHECK(commutant_dimension(r) == 1);
    // Pauli-style generators for C(++).
    Mat g1(2, 2), g2(2, 2);
    g1.at(0, 0) = Scalar(1);
    g1.at(1, 1) = Scalar(-1);
    g2.at(0, 1) = Scalar(1);
    g2.at(1, 0) = Scalar(1);
    Rep p{2, {g1, g2}, {Scalar(1), Scalar(1)}};
    CHECK(p.relations_hold());
    CHECK(commutant_dimension(p) == 1);
    Rep broken{2, {g1, g1}, {Scalar(1), Scalar(1)}};
    std::string why;
    CHECK(!broken.relations_hold(&why));
    CHECK(!why.empty());
}

TEST_CASE("extension ladder from the ground field") {
    Rep r;
    auto s1 = rep_extend(r, Scalar(1));
    CHECK(!s1.doubled);
    CHECK(s1.q_used == Scalar(1));
    CHECK(s1.rep.dim == 1);
    auto s2 = rep_extend(s1.rep, Scalar(1));
    CHECK(s2.doubled);
    CHECK(s2.rep.dim == 2);
    CHECK(s2.rep.relations_hold());
    auto s3 = rep_extend(s2.rep, Scalar(1));
    CHECK(!s3.doubled);
    CHECK(s3.rep.dim == 2);
    CHECK(s3.q_used == Scalar(1));
    CHECK(s3.rep.relations_hold());
    CHECK(commutant_dimension(s3.rep) == 1);
    // A square root request that only exists after rescaling by i.
    auto s3n = rep_extend(s2.rep, Scalar(-1));
    CHECK(!s3n.doubled);
    CHECK(s3n.q_used == Scalar(-1));
    CHECK(s3n.rep.relations_hold());
}
