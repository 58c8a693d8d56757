#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfg/cochain.hpp"

using namespace kfg;

namespace {

// Independent sign oracle: the literal double loop over bit positions.
int naive_reorder_parity(Mask x, Mask y, int n) {
    int sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            sum += int((x >> i) & 1) * int((y >> j) & 1);
    return sum & 1;
}

Scalar naive_clifford(const Signature& sig, Mask x, Mask y) {
    Scalar v(naive_reorder_parity(x, y, sig.n()) ? -1 : 1);
    for (int i = 0; i < sig.n(); ++i)
        if (((x >> i) & 1) && ((y >> i) & 1)) v = v * sig.q[size_t(i)];
    return v;
}

Signature pm1(int n) {
    std::vector<Scalar> q(size_t(n), Scalar(1));
    return Signature(q);
}

}  // namespace

TEST_CASE("signature parsing") {
    Signature s = Signature::parse("+-+");
    CHECK(s.n() == 3);
    CHECK(s.q[0] == Scalar(1));
    CHECK(s.q[1] == Scalar(-1));
    CHECK(s.q[2] == Scalar(1));
    CHECK(s.neg_mask() == 0b010);
    Signature t = Signature::parse("1,-1,1/2");
    CHECK(t.q[2] == Scalar(Rational(1, 2)));
    CHECK(!t.all_pm1());
    CHECK_THROWS_AS(Signature::parse("+0+"), error);
    CHECK_THROWS_AS(Signature::parse("1,0"), error);
    CHECK(concat(s, Signature::parse("-")).str() == "+-+-");
    CHECK(s.negated().neg_mask() == 0b101);
}

TEST_CASE("reorder parity bit kernel matches the double loop") {
    for (int n = 0; n <= 6; ++n)
        for (Mask x = 0; x < (Mask{1} << n); ++x)
            for (Mask y = 0; y < (Mask{1} << n); ++y)
                CHECK(reorder_parity(x, y) == naive_reorder_parity(x, y, n));
}

TEST_CASE("closed-form cochain values") {
    Cochain F = Cochain::clifford(Signature::parse("++"));
    // x = e2, y = e1: one transposition.
    CHECK(F(2, 1) == Scalar(-1));
    CHECK(F(1, 2) == Scalar(1));
    CHECK(F(1, 1) == Scalar(1));
    CHECK(F(3, 3) == Scalar(-1));  // (e1e2)^2 = -q1 q2
    Cochain G = Cochain::clifford(Signature::parse("1,-1,2"));
    Signature sig = Signature::parse("1,-1,2");
    for (Mask x = 0; x < 8; ++x)
        for (Mask y = 0; y < 8; ++y) CHECK(G(x, y) == naive_clifford(sig, x, y));
}

TEST_CASE("normalization is enforced") {
    CHECK(Cochain::clifford(Signature::parse("+-"))(0, 3) == Scalar(1));
    std::vector<std::uint8_t> bits(4, 0);
    bits[1] = 1;  // f(0,1) = 1 breaks F(0,y) = 1
    CHECK_THROWS_AS(Cochain::sign_form(1, bits), error);
    std::vector<Scalar> vals = {Scalar(1), Scalar(1), Scalar(1), Scalar(0)};
    CHECK_THROWS_AS(Cochain::table(1, vals), error);  // nowhere-zero
    vals[3] = Scalar(2);
    Cochain T = Cochain::table(1, vals);
    CHECK(T(1, 1) == Scalar(2));
    CHECK(!T.pm1_valued());
}

TEST_CASE("sign bits agree with values") {
    Cochain F = Cochain::clifford(Signature::parse("+--+"));
    for (Mask x = 0; x < 16; ++x)
        for (Mask y = 0; y < 16; ++y)
            CHECK(F(x, y) == Scalar(F.sign_bit(x, y) ? -1 : 1));
}

TEST_CASE("coboundary and braiding") {
    Cochain F = Cochain::clifford(Signature::parse("-+-"));
    for (Mask x = 0; x < 8; ++x)
        for (Mask y = 0; y < 8; ++y) {
            CHECK(braiding(F, x, y) == F(x, y) / F(y, x));
            for (Mask z = 0; z < 8; ++z) {
                Scalar d = F(x, y) * F(x ^ y, z) / (F(y, z) * F(x, y ^ z));
                CHECK(coboundary3(F, x, y, z) == d);
                CHECK(coboundary3_sign(F, x, y, z) == (d == Scalar(1) ? 0 : 1));
            }
        }
    CHECK(is_cocycle(F));
}

TEST_CASE("a perturbed table is not a cocycle") {
    Cochain F = Cochain::clifford(Signature::parse("++"));
    std::vector<Scalar> vals;
    for (Mask x = 0; x < 4; ++x)
        for (Mask y = 0; y < 4; ++y) vals.push_back(F(x, y));
    vals[size_t(3) * 4 + 3] = Scalar(2);
    CHECK(!is_cocycle(Cochain::table(2, vals)));
}

TEST_CASE("pointwise equality crosses storage kinds") {
    Cochain F = Cochain::clifford(Signature::parse("-+"));
    std::vector<std::uint8_t> bits;
    std::vector<Scalar> vals;
    for (Mask x = 0; x < 4; ++x)
        for (Mask y = 0; y < 4; ++y) {
            bits.push_back(std::uint8_t(F.sign_bit(x, y)));
            vals.push_back(F(x, y));
        }
    CHECK(pointwise_equal(F, Cochain::sign_form(2, bits)));
    CHECK(pointwise_equal(F, Cochain::table(2, vals)));
    CHECK(!pointwise_equal(F, Cochain::clifford(Signature::parse("+-"))));
}

TEST_CASE("character coboundary") {
    // s = (1, i, 1, i) on Z_2^2: ds(x,y) = s(x)s(y)/s(x+y).
    std::vector<Scalar> s = {Scalar(1), Scalar::i(), Scalar(1), Scalar::i()};
    CHECK(character_coboundary(s, 1, 1) == Scalar(-1));
    CHECK(character_coboundary(s, 1, 2) == Scalar(1));
    CHECK(character_coboundary(s, 1, 3) == Scalar(-1));  // i * i / s(2)
    for (Mask x = 0; x < 4; ++x)
        for (Mask y = 0; y < 4; ++y)
            CHECK(character_coboundary(s, x, y) ==
                  s[x] * s[y] / s[x ^ y]);
}

TEST_CASE("exhaustive cocycle check refuses huge groups") {
    CHECK_THROWS_AS(is_cocycle(Cochain::clifford(pm1(13))), error);
}
