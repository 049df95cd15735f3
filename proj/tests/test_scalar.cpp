#include <doctest.h>

#include <random>

#include "hecke/scalar.hpp"

using namespace hecke;

namespace {

std::vector<const ScalarField*> all_variants() {
    return {ScalarField::rational(mpq_class(3, 2)), ScalarField::prime(5, 2),
            ScalarField::cyclotomic(3), ScalarField::generic()};
}

Scalar random_scalar(const ScalarField* f, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-6, 6);
    Scalar s = Scalar::from_int(f, small(rng));
    // mix in a q power so every variant exercises its parameter
    return s + Scalar::q_power(f, small(rng) % 3);
}

}  // namespace

TEST_CASE("q times q inverse is one in every variant") {
    for (const auto* f : all_variants()) {
        Scalar q = Scalar::q_power(f, 1);
        CHECK(q * Scalar::q_power(f, -1) == Scalar::one(f));
        CHECK(q * q.inverse() == Scalar::one(f));
    }
}

TEST_CASE("prime field q=2 mod 5 has order four") {
    const auto* f = ScalarField::prime(5, 2);
    CHECK(Scalar::q_power(f, 4) == Scalar::one(f));
    CHECK(Scalar::q_power(f, 2) != Scalar::one(f));
}

TEST_CASE("cyclotomic l=2 is q=-1") {
    const auto* f = ScalarField::cyclotomic(2);
    CHECK(Scalar::q_power(f, 1) == -Scalar::one(f));
    CHECK(Scalar::q_power(f, 2) == Scalar::one(f));
}

TEST_CASE("q_power basics") {
    for (const auto* f : all_variants()) CHECK(Scalar::q_power(f, 0) == Scalar::one(f));
    const auto* g = ScalarField::generic();
    CHECK(Scalar::q_power(g, -1).str() == "(1)/(q)");
    const auto* r1 = ScalarField::rational(1);
    CHECK(Scalar::q_power(r1, 17) == Scalar::one(r1));
    CHECK(Scalar::q_power(r1, -9) == Scalar::one(r1));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(42);
    for (const auto* f : all_variants()) {
        for (int trial = 0; trial < 60; ++trial) {
            Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == Scalar::zero(f));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(f));
                CHECK(b / a * a == b);
            }
        }
    }
}

TEST_CASE("generic computations specialize to rational ones") {
    std::mt19937 rng(7);
    const auto* g = ScalarField::generic();
    std::uniform_int_distribution<int> small(-4, 4);
    for (int trial = 0; trial < 80; ++trial) {
        mpq_class c(small(rng), 1 + std::abs(small(rng)));
        c.canonicalize();
        if (c == 0) continue;
        const auto* r = ScalarField::rational(c);
        int e1 = small(rng), a1 = small(rng), e2 = small(rng), a2 = small(rng);
        // the same expression tree evaluated in both fields
        auto expr = [&](const ScalarField* f) {
            Scalar x = Scalar::q_power(f, e1) + Scalar::from_int(f, a1);
            Scalar y = Scalar::q_power(f, e2) - Scalar::from_int(f, a2);
            return x * y + Scalar::q_power(f, -1);
        };
        mpq_class via_generic = expr(g).eval_at(c);
        Scalar via_rational = expr(r);
        CHECK(via_rational == Scalar::from_rational(r, via_generic));
    }
}

TEST_CASE("cyclotomic minimal polynomial vanishes on q") {
    for (int l : {2, 3, 4, 5, 6, 12}) {
        const auto* f = ScalarField::cyclotomic(l);
        Poly phi = cyclotomic_polynomial(l);
        CHECK(phi.degree() == euler_phi(l));
        Scalar acc = Scalar::zero(f);
        for (int i = 0; i <= phi.degree(); ++i)
            acc += Scalar::from_rational(f, phi.coeff(i)) * Scalar::q_power(f, i);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("errors: mismatched fields and zero division") {
    const auto* a = ScalarField::rational(1);
    const auto* b = ScalarField::generic();
    CHECK_THROWS_AS((void)(Scalar::one(a) + Scalar::one(b)), FieldMismatch);
    CHECK_THROWS_AS((void)(Scalar::one(a) / Scalar::zero(a)), DivisionByZero);
    CHECK_THROWS_AS((void)Scalar::zero(b).inverse(), DivisionByZero);
}

TEST_CASE("descriptor parsing round trips") {
    CHECK(ScalarField::parse("rational:q=3/2")->descriptor == "rational:q=3/2");
    CHECK(ScalarField::parse("gf:p=2,q=1")->descriptor == "gf:p=2,q=1");
    CHECK(ScalarField::parse("cyclotomic:l=3")->descriptor == "cyclotomic:l=3");
    CHECK(ScalarField::parse("generic")->descriptor == "generic");
    CHECK(ScalarField::parse("rational:q=3/2") == ScalarField::rational(mpq_class(3, 2)));
    CHECK_THROWS(ScalarField::parse("float:x=1"));
    CHECK_THROWS(ScalarField::parse("gf:p=6,q=1"));
    CHECK_THROWS(ScalarField::parse("rational:q=0"));
    CHECK_THROWS(ScalarField::parse("cyclotomic:l=1"));
    CHECK_THROWS(ScalarField::parse("gf:p=2"));
}

TEST_CASE("canonical strings") {
    const auto* r = ScalarField::rational(mpq_class(3, 2));
    CHECK((Scalar::from_int(r, 2) / Scalar::from_int(r, 4)).str() == "1/2");
    const auto* g = ScalarField::generic();
    Scalar v = Scalar::q_power(g, 2) - Scalar::one(g);
    CHECK(v.str() == "-1 + q^2");
    const auto* c3 = ScalarField::cyclotomic(3);
    CHECK(Scalar::q_power(c3, 2).str() == "-1 - q");  // zeta^2 = -1 - zeta
}
