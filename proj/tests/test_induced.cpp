#include <doctest.h>

#include <random>

#include "hecke/induced.hpp"

using namespace hecke;

namespace {
const ScalarField* G = ScalarField::generic();
}

TEST_CASE("tensor reduction in M(3,2)") {
    InducedModule m(3, 2, G);
    CHECK(m.dim() == 3);

    auto [idx, coeff] = m.reduce_tensor(Permutation::transposition(3, 1));
    CHECK(idx == m.index_of(Permutation(3)));
    CHECK(coeff == Scalar::q_power(G, 1));

    // basis representatives reduce to themselves
    for (const auto& x : m.basis()) {
        auto [i, c] = m.reduce_tensor(x);
        CHECK(i == m.index_of(x));
        CHECK(c.is_one());
    }
}

TEST_CASE("reduction against the exhaustive factorization oracle") {
    InducedModule m(3, 2, G);
    for (const auto& w : all_permutations(3)) {
        auto [idx, coeff] = m.reduce_tensor(w);
        // oracle: unique x v decomposition with lengths adding
        int hits = 0;
        for (const auto& x : m.basis())
            for (const auto& v : subgroup_elements(GenSet::parabolic(ParabolicRank{3, 2})))
                if (x.compose(v) == w && x.length() + v.length() == w.length()) {
                    ++hits;
                    CHECK(idx == m.index_of(x));
                    CHECK(coeff == Scalar::q_power(G, v.length()));
                }
        CHECK(hits == 1);
    }
}

TEST_CASE("module dimensions") {
    for (int n = 1; n <= 5; ++n)
        for (int mrank = 0; mrank <= n; ++mrank) {
            InducedModule m(n, mrank, G);
            CHECK(m.dim() == factorial(n) / factorial(std::max(mrank, 1)));
        }
}

TEST_CASE("action on basis vectors in M(3,2)") {
    InducedModule m(3, 2, G);
    Scalar q = Scalar::q_power(G, 1);
    std::vector<Scalar> e0(m.dim(), Scalar::zero(G));
    e0[m.index_of(Permutation(3))] = Scalar::one(G);

    HeckeElement t2 = HeckeElement::t_basis(3, G, Permutation::transposition(3, 2));
    auto v = m.act(t2, e0);
    std::vector<Scalar> expect(m.dim(), Scalar::zero(G));
    expect[m.index_of(Permutation::transposition(3, 2))] = Scalar::one(G);
    CHECK(v == expect);

    HeckeElement t1 = HeckeElement::t_basis(3, G, Permutation::transposition(3, 1));
    auto v1 = m.act(t1, e0);
    std::vector<Scalar> expect1(m.dim(), Scalar::zero(G));
    expect1[m.index_of(Permutation(3))] = q;
    CHECK(v1 == expect1);

    // T_2 on (T_{s_2} (x) 1) = (q-1)(T_{s_2} (x) 1) + q (1 (x) 1)
    auto v2 = m.act(t2, v);
    std::vector<Scalar> expect2(m.dim(), Scalar::zero(G));
    expect2[m.index_of(Permutation::transposition(3, 2))] = q - Scalar::one(G);
    expect2[m.index_of(Permutation(3))] = q;
    CHECK(v2 == expect2);
}

TEST_CASE("action matrices: trivial module and the regular rank-2 case") {
    for (int i : {1, 2, 3}) {
        InducedModule m(4, 4, G);
        ScalarMatrix a = m.action_matrix(i);
        REQUIRE(a.rows() == 1);
        CHECK(a.at(0, 0) == Scalar::q_power(G, 1));
    }

    InducedModule m21(2, 1, G);
    ScalarMatrix a = m21.action_matrix(1);
    Scalar q = Scalar::q_power(G, 1);
    REQUIRE(a.rows() == 2);
    int e = m21.index_of(Permutation(2));
    int s = m21.index_of(Permutation::transposition(2, 1));
    CHECK(a.at(e, e).is_zero());
    CHECK(a.at(s, e).is_one());
    CHECK(a.at(e, s) == q);
    CHECK(a.at(s, s) == q - Scalar::one(G));
}

TEST_CASE("quadratic and braid relations hold in every action") {
    for (int n = 2; n <= 4; ++n)
        for (int mrank = 0; mrank <= n; ++mrank) {
            InducedModule m(n, mrank, G);
            Scalar q = Scalar::q_power(G, 1);
            std::vector<ScalarMatrix> acts;
            for (int i = 1; i <= n - 1; ++i) acts.push_back(m.action_matrix(i));
            ScalarMatrix id = ScalarMatrix::identity(G, m.dim());
            for (const auto& a : acts)
                CHECK(((a + id) * (a - id.scaled(q))).is_zero());
            for (int i = 0; i + 1 < n - 1; ++i) {
                CHECK(acts[i] * acts[i + 1] * acts[i] == acts[i + 1] * acts[i] * acts[i + 1]);
            }
            for (int i = 0; i < n - 1; ++i)
                for (int j = i + 2; j < n - 1; ++j) CHECK(acts[i] * acts[j] == acts[j] * acts[i]);
        }
}

TEST_CASE("acting commutes with reducing") {
    std::mt19937 rng(13);
    const auto& all = all_permutations(4);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    InducedModule m(4, 2, G);
    for (int trial = 0; trial < 30; ++trial) {
        const Permutation& w = all[pick(rng)];
        const Permutation& h = all[pick(rng)];
        HeckeElement hw = HeckeElement::t_basis(4, G, w);
        HeckeElement hh = HeckeElement::t_basis(4, G, h);
        // reduce then act
        std::vector<Scalar> red = m.reduce_element(hw);
        std::vector<Scalar> acted = m.act(hh, red);
        // act in the algebra then reduce
        std::vector<Scalar> direct = m.reduce_element(mult(hh, hw));
        CHECK(acted == direct);
    }
}

TEST_CASE("act is compatible with multiplication") {
    std::mt19937 rng(29);
    const auto& all = all_permutations(3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    InducedModule m(3, 1, G);
    for (int trial = 0; trial < 25; ++trial) {
        HeckeElement a = HeckeElement::t_basis(3, G, all[pick(rng)]);
        HeckeElement b = HeckeElement::t_basis(3, G, all[pick(rng)]);
        std::vector<Scalar> v(m.dim(), Scalar::zero(G));
        v[pick(rng) % m.dim()] = Scalar::q_power(G, 1);
        CHECK(m.act(mult(a, b), v) == m.act(a, m.act(b, v)));
    }
}
