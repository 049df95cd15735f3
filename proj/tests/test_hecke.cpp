#include <doctest.h>

#include <random>

#include "hecke/hecke_algebra.hpp"

using namespace hecke;

namespace {
const ScalarField* G = ScalarField::generic();
}

TEST_CASE("quadratic relation in rank two") {
    HeckeElement t1 = HeckeElement::t_basis(2, G, Permutation::transposition(2, 1));
    HeckeElement sq = mult(t1, t1);
    Scalar q = Scalar::q_power(G, 1);
    HeckeElement expect = t1.scaled(q - Scalar::one(G)) + HeckeElement::unit(2, G).scaled(q);
    CHECK(sq == expect);
}

TEST_CASE("lengths-add products concatenate") {
    HeckeElement t1 = HeckeElement::t_basis(3, G, Permutation::transposition(3, 1));
    HeckeElement t2 = HeckeElement::t_basis(3, G, Permutation::transposition(3, 2));
    Permutation s1s2 = Permutation::transposition(3, 1).compose(Permutation::transposition(3, 2));
    CHECK(mult(t1, t2) == HeckeElement::t_basis(3, G, s1s2));
}

TEST_CASE("basis element does not depend on the reduced word") {
    Permutation w0 = Permutation::from_one_line({3, 2, 1});
    HeckeElement a = HeckeElement::unit(3, G).right_mul_gen(1).right_mul_gen(2).right_mul_gen(1);
    HeckeElement b = HeckeElement::unit(3, G).right_mul_gen(2).right_mul_gen(1).right_mul_gen(2);
    CHECK(a == b);
    CHECK(a == HeckeElement::t_basis(3, G, w0));
}

TEST_CASE("t_ba family") {
    CHECK(HeckeElement::t_ba(4, G, 2, 2) == HeckeElement::unit(4, G));
    CHECK(HeckeElement::t_ba(4, G, 3, 2) ==
          HeckeElement::t_basis(4, G, Permutation::transposition(4, 2)));
    HeckeElement t31 = HeckeElement::t_ba(3, G, 3, 1);
    HeckeElement t2t1 = mult(HeckeElement::t_basis(3, G, Permutation::transposition(3, 2)),
                             HeckeElement::t_basis(3, G, Permutation::transposition(3, 1)));
    CHECK(t31 == t2t1);
    CHECK(t31 == HeckeElement::t_basis(3, G, Permutation::cycle_sba(3, 3, 1)));
    CHECK_THROWS(HeckeElement::t_ba(3, G, 1, 2));
    CHECK_THROWS(HeckeElement::t_ba(3, G, 4, 1));
}

TEST_CASE("characters") {
    Permutation s1s2 = Permutation::transposition(3, 1).compose(Permutation::transposition(3, 2));
    HeckeElement h = HeckeElement::t_basis(3, G, s1s2);
    CHECK(character(CharacterKind::Trivial, h) == Scalar::q_power(G, 2));

    HeckeElement t1 = HeckeElement::t_basis(3, G, Permutation::transposition(3, 1));
    CHECK(character(CharacterKind::Sign, t1) == -Scalar::one(G));

    // both characters annihilate the quadratic relation
    Scalar q = Scalar::q_power(G, 1);
    HeckeElement rel = mult(t1 + HeckeElement::unit(3, G),
                            t1 - HeckeElement::unit(3, G).scaled(q));
    CHECK(rel.is_zero());
    CHECK(character(CharacterKind::Trivial, rel).is_zero());
    CHECK(character(CharacterKind::Sign, rel).is_zero());

    // multiplicativity on random pairs
    std::mt19937 rng(3);
    const auto& all = all_permutations(4);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int s = 0; s < 50; ++s) {
        HeckeElement a = HeckeElement::t_basis(4, G, all[pick(rng)]);
        HeckeElement b = HeckeElement::t_basis(4, G, all[pick(rng)]);
        for (auto kind : {CharacterKind::Trivial, CharacterKind::Sign})
            CHECK(character(kind, mult(a, b)) == character(kind, a) * character(kind, b));
    }
}

TEST_CASE("associativity on random basis triples") {
    std::mt19937 rng(9);
    for (int n = 2; n <= 4; ++n) {
        const auto& all = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int s = 0; s < 40; ++s) {
            HeckeElement a = HeckeElement::t_basis(n, G, all[pick(rng)]);
            HeckeElement b = HeckeElement::t_basis(n, G, all[pick(rng)]);
            HeckeElement c = HeckeElement::t_basis(n, G, all[pick(rng)]);
            CHECK(mult(mult(a, b), c) == mult(a, mult(b, c)));
        }
    }
}

TEST_CASE("q = 1 multiplication is the group algebra") {
    const ScalarField* f1 = ScalarField::rational(1);
    for (const auto& u : all_permutations(3))
        for (const auto& v : all_permutations(3))
            CHECK(mult(HeckeElement::t_basis(3, f1, u), HeckeElement::t_basis(3, f1, v)) ==
                  HeckeElement::t_basis(3, f1, u.compose(v)));
}

TEST_CASE("product identities for the T_ba family") {
    for (int n = 2; n <= 4; ++n) {
        TmovesReport rep = verify_tmoves(n, G);
        CHECK(rep.pass());
        CHECK(rep.clash_checked > 0);
    }

    // the smallest clash instance: T_1 T_1 = (q-1) T_1 + q
    HeckeElement lhs = mult(HeckeElement::t_ba(3, G, 2, 1), HeckeElement::t_ba(3, G, 2, 1));
    Scalar q = Scalar::q_power(G, 1);
    HeckeElement rhs = mult(HeckeElement::t_ba(3, G, 1, 1), HeckeElement::t_ba(3, G, 2, 1))
                           .scaled(q - Scalar::one(G)) +
                       mult(HeckeElement::t_ba(3, G, 1, 1), HeckeElement::t_ba(3, G, 2, 2))
                           .scaled(q);
    CHECK(lhs == rhs);

    // index-lowering swap: T_31 T_2 = T_1 T_31
    CHECK(mult(HeckeElement::t_ba(3, G, 3, 1), HeckeElement::t_ba(3, G, 3, 2)) ==
          mult(HeckeElement::t_ba(3, G, 2, 1), HeckeElement::t_ba(3, G, 3, 1)));
}

TEST_CASE("rank and field mismatches are rejected") {
    CHECK_THROWS_AS(
        (void)mult(HeckeElement::unit(2, G), HeckeElement::unit(3, G)), RankMismatch);
    const ScalarField* f1 = ScalarField::rational(1);
    CHECK_THROWS_AS(
        (void)mult(HeckeElement::unit(2, G), HeckeElement::unit(2, f1)), RankMismatch);
}

TEST_CASE("support never exceeds the group order") {
    std::mt19937 rng(21);
    const auto& all = all_permutations(4);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    HeckeElement acc = HeckeElement::unit(4, G);
    for (int s = 0; s < 6; ++s)
        acc = mult(acc, HeckeElement::t_basis(4, G, all[pick(rng)]) + HeckeElement::unit(4, G));
    CHECK(acc.coords().size() <= 24);
}
