#include <doctest.h>

#include <random>

#include "hecke/d_complex.hpp"
#include "hecke/injective_words.hpp"

using namespace hecke;

TEST_CASE("word enumeration") {
    auto w0 = injective_words(3, 0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].empty());
    CHECK(injective_words(3, 2).size() == 6);
    CHECK(injective_words(3, 3).size() == 6);
    CHECK(injective_words(3, 4).empty());
    auto w2 = injective_words(3, 2);
    CHECK(w2[0] == std::vector<int>{1, 2});
    CHECK(w2[1] == std::vector<int>{1, 3});
}

TEST_CASE("dimensions of the word complex") {
    const auto* f = ScalarField::rational(1);
    FreeChainComplex c = build_C(3, f);
    CHECK(c.dim(-1) == 1);
    CHECK(c.dim(0) == 3);
    CHECK(c.dim(1) == 6);
    CHECK(c.dim(2) == 6);
}

TEST_CASE("single letters map to the empty word") {
    const auto* f = ScalarField::rational(1);
    FreeChainComplex c = build_C(4, f);
    const ScalarMatrix& b0 = c.boundary(0);
    for (int j = 0; j < 4; ++j) CHECK(b0.at(0, j).is_one());
}

TEST_CASE("q != 1 fields are rejected") {
    CHECK_THROWS(build_C(3, ScalarField::generic()));
    CHECK_THROWS(build_C(3, ScalarField::rational(2)));
    CHECK_THROWS(build_Cprime(3, ScalarField::cyclotomic(3)));
}

TEST_CASE("acyclicity of the word complex and its top betti number") {
    const auto* f = ScalarField::rational(1);
    auto betti = build_C(3, f).homology_dims();
    CHECK(betti[0] == std::pair<int, long>{-1, 0});
    CHECK(betti[1] == std::pair<int, long>{0, 0});
    CHECK(betti[2] == std::pair<int, long>{1, 0});
    CHECK(betti[3] == std::pair<int, long>{2, 2});  // euler characteristic -(1-3+6-6)

    for (int n = 1; n <= 5; ++n)
        for (const auto* field : {ScalarField::rational(1), ScalarField::prime(2, 1)}) {
            auto bs = build_C(n, field).homology_dims();
            for (const auto& [d, b] : bs)
                if (d <= n - 2) CHECK(b == 0);
        }
}

TEST_CASE("translated complex agrees with the word complex degreewise") {
    const auto* f = ScalarField::rational(1);
    FreeChainComplex cp = build_Cprime(3, f);
    FreeChainComplex c = build_C(3, f);
    for (int r = -1; r <= 2; ++r) CHECK(cp.dim(r) == c.dim(r));
    // bottom face: 1 (x) 1 -> 1 (x) 1
    CHECK(cp.boundary(0).at(0, 0).is_one());
}

TEST_CASE("translated complex equals the deformed complex at q = 1") {
    for (const auto* f : {ScalarField::rational(1), ScalarField::prime(2, 1)}) {
        for (int n = 1; n <= 4; ++n) {
            FreeChainComplex cp = build_Cprime(n, f);
            DComplex d(n, f);
            for (int r = 0; r <= n - 1; ++r) CHECK(cp.boundary(r) == d.complex().boundary(r));
        }
    }
}

TEST_CASE("theta is a permutation-block isomorphism") {
    const auto* f = ScalarField::rational(1);
    for (int n = 1; n <= 4; ++n) {
        FreeChainComplex cp = build_Cprime(n, f);
        FreeChainComplex c = build_C(n, f);
        ChainMap th = theta(n, cp, c);
        CHECK(verify_chain_map(th).pass());
        CHECK(is_iso(th));
        for (const auto& [r, b] : th.blocks)
            if (b.rows() > 0) CHECK(b.is_permutation_matrix());
    }
}

TEST_CASE("theta on distinguished generators") {
    const auto* f = ScalarField::rational(1);
    int n = 4;
    FreeChainComplex cp = build_Cprime(n, f);
    FreeChainComplex c = build_C(n, f);
    ChainMap th = theta(n, cp, c);

    // degree -1: the empty word
    CHECK(th.blocks.at(-1).at(0, 0).is_one());

    // identity tensor goes to the ascending word (n-r,...,n)
    for (int r = 0; r <= n - 1; ++r) {
        InducedModule mod(n, n - r - 1, f);
        auto words = injective_words(n, r + 1);
        int col = mod.index_of(Permutation(n));
        std::vector<int> expect;
        for (int i = n - r; i <= n; ++i) expect.push_back(i);
        int row = -1;
        for (std::size_t k = 0; k < words.size(); ++k)
            if (words[k] == expect) row = static_cast<int>(k);
        REQUIRE(row >= 0);
        CHECK(th.blocks.at(r).at(row, col).is_one());
    }
}

TEST_CASE("the symmetric group acts the same on tautologous letters") {
    const auto* f = ScalarField::prime(2, 1);
    std::mt19937 rng(31);
    int n = 4;
    const auto& all = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int r = -1; r <= n - 1; ++r) {
        InducedModule mod(n, n - r - 1, f);
        std::uniform_int_distribution<int> pickb(0, mod.dim() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const Permutation& sigma = all[pick(rng)];
            const Permutation& x = mod.basis()[pickb(rng)];
            auto [idx, coeff] = mod.reduce_tensor(sigma.compose(x));
            CHECK(coeff.is_one());
            const Permutation& y = mod.basis()[idx];
            for (int i = n - r; i <= n; ++i) CHECK(sigma(x(i)) == y(i));
        }
    }
}
