#include "k3lab/lattice.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace k3lab;
using k3lab::testing::Rng;

namespace {
std::pair<LatticeVector, LatticeVector> uBasis(const LatticePtr& u) {
    return {basisVector(u, 0), basisVector(u, 1)};
}
} // namespace

TEST_CASE("hyperbolic plane pairings") {
    auto u = hyperbolicPlane();
    auto [w, wstar] = uBasis(u);
    CHECK(pairing(w, wstar) == 1);
    CHECK(square(w) == 0);
    CHECK(square(wstar) == 0);
    CHECK(square(w + Int(3) * wstar) == 6);
    for (long m = -3; m <= 5; ++m) CHECK(square(w + Int(m) * wstar) == 2 * m);
}

TEST_CASE("pair rejects lattice mismatch") {
    auto u = hyperbolicPlane();
    auto e8 = minusE8();
    CHECK_THROWS_AS(pairing(basisVector(u, 0), basisVector(e8, 0)), Error);
}

TEST_CASE("standard lattices") {
    auto u = makeStandardLattice(StandardLattice::U);
    CHECK(u->rank() == 2);
    CHECK(u->signature() == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(u->even());

    auto e8 = makeStandardLattice(StandardLattice::MinusE8);
    CHECK(e8->rank() == 8);
    CHECK(e8->even());
    // exact values computed with the library's own Bareiss determinant /
    // Sylvester elimination ahead of freezing them here
    CHECK(determinant(e8->gram()) == 1);
    CHECK(e8->signature() == std::pair<std::size_t, std::size_t>{0, 8});

    auto k3 = makeStandardLattice(StandardLattice::K3);
    CHECK(k3->rank() == 22);
    CHECK(k3->signature() == std::pair<std::size_t, std::size_t>{3, 19});
    CHECK(k3->even());
    CHECK(determinant(k3->gram()) == -1);

    CHECK(uSum(3)->rank() == 6);
    CHECK(uSum(3)->signature() == std::pair<std::size_t, std::size_t>{3, 3});
}

TEST_CASE("direct sums") {
    auto u = hyperbolicPlane();
    auto uu = directSum(u, u);
    CHECK(uu.sum->rank() == 4);
    CHECK(uu.sum->signature() == std::pair<std::size_t, std::size_t>{2, 2});

    auto k3u = directSum(k3Lattice(), u);
    CHECK(k3u.sum->rank() == 24);
    CHECK(k3u.sum->signature() == std::pair<std::size_t, std::size_t>{4, 20});

    auto e8u = directSum(minusE8(), u);
    CHECK(e8u.sum->rank() == 10);
    CHECK(e8u.sum->signature() == std::pair<std::size_t, std::size_t>{1, 9});

    // inclusions preserve the pairing
    auto x = basisVector(u, 0) + Int(2) * basisVector(u, 1);
    CHECK(square(uu.embedLeft(x)) == square(x));
    CHECK(square(uu.embedRight(x)) == square(x));
    CHECK(pairing(uu.embedLeft(x), uu.embedRight(x)) == 0);
}

TEST_CASE("lattice invariants enforced") {
    IMat notSym(2, 2);
    notSym(0, 1) = 1; // (1,0) entry left 0
    CHECK_THROWS_AS(makeLattice(notSym, "bad"), Error);

    IMat degenerate(2, 2);
    degenerate(0, 0) = 1;
    CHECK_THROWS_AS(makeLattice(degenerate, "bad"), Error);

    IMat odd(1, 1);
    odd(0, 0) = 3;
    CHECK_FALSE(makeLattice(odd, "<3>")->even());
}

TEST_CASE("primitivity") {
    auto u = hyperbolicPlane();
    auto [w, wstar] = uBasis(u);
    CHECK(isPrimitive(w + Int(3) * wstar));
    CHECK_FALSE(isPrimitive(Int(2) * w + Int(4) * wstar));
    CHECK(isPrimitive(Int(2) * w + wstar));
    CHECK_THROWS_AS(isPrimitive(zeroVector(u)), Error);
}

TEST_CASE("orthogonal complements") {
    auto u = hyperbolicPlane();
    auto [w, wstar] = uBasis(u);

    SECTION("isotropic vector is self-orthogonal") {
        Sublattice s(u, {w});
        auto c = orthogonalComplement(s);
        REQUIRE(c.rank() == 1);
        CHECK((c.basis()[0] == w || c.basis()[0] == -w));
    }
    SECTION("<w+w*> has complement <w-w*>") {
        Sublattice s(u, {w + wstar});
        auto c = orthogonalComplement(s);
        REQUIRE(c.rank() == 1);
        CHECK((c.basis()[0] == w - wstar || c.basis()[0] == -(w - wstar)));
    }
    SECTION("one U summand inside K3") {
        auto k3 = k3Lattice();
        Sublattice s(k3, {basisVector(k3, 20), basisVector(k3, 21)});
        auto c = orthogonalComplement(s);
        REQUIRE(c.rank() == 20);
        CHECK(symmetricSignature(toRational(c.restrictedGram())) ==
              std::pair<std::size_t, std::size_t>{2, 18});
    }
}

TEST_CASE("saturation at construction") {
    auto u = hyperbolicPlane();
    auto [w, wstar] = uBasis(u);
    Sublattice s(u, {Int(2) * w}); // index-2 sublattice of its saturation
    REQUIRE(s.rank() == 1);
    CHECK((s.basis()[0] == w || s.basis()[0] == -w));
    CHECK(s.contains(w.toRational()));

    CHECK_THROWS_AS(Sublattice(u, {w, Int(3) * w}), Error); // dependent generators
}

TEST_CASE("hyperbolic splitting") {
    auto k3 = k3Lattice();
    auto v = basisVector(k3, 20), vstar = basisVector(k3, 21);
    auto e = basisVector(k3, 0);

    SECTION("documented splits") {
        auto s1 = splitHyperbolic(v, v, vstar);
        CHECK(s1.orthogonalPart.isZero());
        CHECK(s1.lambda == 1);
        CHECK(s1.mu == 0);

        auto s2 = splitHyperbolic(vstar + v, v, vstar);
        CHECK(s2.orthogonalPart.isZero());
        CHECK(s2.lambda == 1);
        CHECK(s2.mu == 1);

        auto s3 = splitHyperbolic(e + Int(2) * v + Int(5) * vstar, v, vstar);
        CHECK(s3.orthogonalPart == e);
        CHECK(s3.lambda == 2);
        CHECK(s3.mu == 5);
    }
    SECTION("rejects non-hyperbolic pair") {
        CHECK_THROWS_AS(splitHyperbolic(e, v, v), Error);
        CHECK_THROWS_AS(splitHyperbolic(e, e, vstar), Error);
    }
    SECTION("round trip and orthogonality on random vectors") {
        Rng rng(7);
        for (int t = 0; t < 200; ++t) {
            auto x = testing::randLatticeVector(rng, k3);
            auto s = splitHyperbolic(x, v, vstar);
            CHECK(s.orthogonalPart + s.lambda * v + s.mu * vstar == x);
            CHECK(pairing(s.orthogonalPart, v) == 0);
            CHECK(pairing(s.orthogonalPart, vstar) == 0);
        }
    }
}

TEST_CASE("pairing is bilinear and symmetric") {
    Rng rng(11);
    auto k3 = k3Lattice();
    for (int t = 0; t < 100; ++t) {
        auto x = testing::randRationalVector(rng, k3);
        auto y = testing::randRationalVector(rng, k3);
        auto z = testing::randRationalVector(rng, k3);
        Rat a = testing::randRat(rng);
        CHECK(pairing(x, y) == pairing(y, x));
        CHECK(pairing(x + a * y, z) == pairing(x, z) + a * pairing(y, z));
    }
}

TEST_CASE("even lattices have even squares") {
    Rng rng(13);
    for (const auto& lat : {hyperbolicPlane(), minusE8(), k3Lattice()}) {
        REQUIRE(lat->even());
        for (int t = 0; t < 1000; ++t) {
            auto x = testing::randLatticeVector(rng, lat, 5);
            CHECK(square(x) % 2 == 0);
        }
    }
}

TEST_CASE("signature is a congruence invariant") {
    Rng rng(17);
    auto k3 = k3Lattice();
    auto base = k3->signature();
    for (int t = 0; t < 100; ++t) {
        IMat s = testing::randomUnimodular(rng, k3->rank(), 30);
        IMat g = s.transposed() * k3->gram() * s;
        CHECK(symmetricSignature(toRational(g)) == base);
    }
}

TEST_CASE("complement rank adds up and is orthogonal") {
    Rng rng(19);
    auto k3 = k3Lattice();
    for (int t = 0; t < 25; ++t) {
        std::vector<LatticeVector> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(testing::randLatticeVector(rng, k3, 4));
        Sublattice s = [&]() -> Sublattice {
            try {
                return Sublattice(k3, gens);
            } catch (const Error&) {
                return Sublattice(k3, {gens[0].isZero() ? basisVector(k3, 0) : gens[0]});
            }
        }();
        auto c = orthogonalComplement(s);
        CHECK(s.rank() + c.rank() == k3->rank());
        for (const auto& a : s.basis())
            for (const auto& b : c.basis()) CHECK(pairing(a, b) == 0);
    }
}
