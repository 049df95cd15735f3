#include <doctest.h>

#include <set>

#include "hecke/cosets.hpp"
#include "hecke/permutation.hpp"

using namespace hecke;

TEST_CASE("composition basics") {
    Permutation s1 = Permutation::transposition(2, 1);
    CHECK(s1.compose(s1).is_identity());

    Permutation s31 = Permutation::cycle_sba(3, 3, 1);
    CHECK(s31.one_line() == std::vector<int>{3, 1, 2});
    CHECK(s31.compose(s31).compose(s31).is_identity());

    CHECK_THROWS_AS((void)Permutation(2).compose(Permutation(3)), RankMismatch);
}

TEST_CASE("length equals inversion count and s_ba has length b-a") {
    CHECK(Permutation(4).length() == 0);
    CoxWord w0{3, {1, 2, 1}};
    CHECK(w0.evaluate().length() == 3);
    for (int n = 2; n <= 6; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) CHECK(Permutation::cycle_sba(n, b, a).length() == b - a);
}

TEST_CASE("word problem shortening") {
    auto r1 = word_problem(CoxWord{2, {1, 1}});
    CHECK_FALSE(r1.is_reduced);
    CHECK(r1.shortened.letters.empty());

    auto r2 = word_problem(CoxWord{3, {1, 2, 1}});
    CHECK(r2.is_reduced);
    CHECK(r2.shortened.letters == std::vector<int>{1, 2, 1});

    auto r3 = word_problem(CoxWord{3, {2, 1, 1, 2}});
    CHECK_FALSE(r3.is_reduced);
    CHECK(r3.shortened.letters.empty());
}

TEST_CASE("word problem agrees with inversion counts for every element") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : all_permutations(n)) {
            CoxWord word{n, w.lex_min_reduced_word()};
            auto r = word_problem(word);
            CHECK(r.is_reduced);
            CHECK(static_cast<int>(word.letters.size()) == w.length());
            CHECK(word.evaluate() == w);
        }
    }
}

TEST_CASE("deletion condition") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& w : all_permutations(n))
            for (int i = 1; i <= n - 1; ++i) {
                int d = w.left_mul_s(i).length() - w.length();
                CHECK((d == 1 || d == -1));
            }
}

TEST_CASE("reduced-word orbits") {
    Permutation w0 = Permutation::from_one_line({3, 2, 1});
    auto orbit = matsumoto_orbit(w0);
    CHECK(orbit == std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});

    CHECK(matsumoto_orbit(Permutation(3)) == std::set<std::vector<int>>{{}});
    CHECK(matsumoto_orbit(Permutation::transposition(3, 1)) == std::set<std::vector<int>>{{1}});

    CHECK_THROWS_AS((void)matsumoto_orbit(Permutation::from_one_line({5, 4, 3, 2, 1}), 3),
                    GuardExceeded);
}

TEST_CASE("orbit members are singly connected and all reduced") {
    Permutation w0 = Permutation::from_one_line({4, 3, 2, 1});
    auto orbit = matsumoto_orbit(w0);
    CHECK(orbit.size() == 16);
    for (const auto& word : orbit) {
        CHECK(static_cast<int>(word.size()) == w0.length());
        CHECK(CoxWord{4, word}.evaluate() == w0);
        bool connected = false;
        for (const auto& nb : braid_neighbours(word))
            if (orbit.count(nb)) connected = true;
        CHECK(connected);
    }
}

TEST_CASE("lexicographically minimal reduced word is minimal in its orbit") {
    for (const auto& w : all_permutations(4)) {
        auto word = w.lex_min_reduced_word();
        auto orbit = matsumoto_orbit(w);
        CHECK(*orbit.begin() == word);
    }
}

TEST_CASE("distinguished representatives of the top parabolic") {
    auto reps = coset_reps(ParabolicRank{3, 2}, CosetSide::Right);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].is_identity());
    CHECK(reps[1] == Permutation::transposition(3, 2));
    CHECK(reps[2] == Permutation::cycle_sba(3, 3, 1));
}

TEST_CASE("coset representative counts") {
    CHECK(coset_reps(ParabolicRank{4, 2}, CosetSide::Right).size() == 12);
    auto whole = coset_reps(ParabolicRank{4, 4}, CosetSide::Right);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].is_identity());
    // k = 0 and k = 1 both denote the trivial subgroup
    CHECK(coset_reps(ParabolicRank{4, 0}, CosetSide::Right).size() == 24);
    CHECK(coset_reps(ParabolicRank{4, 1}, CosetSide::Right).size() == 24);
}

TEST_CASE("length additivity across the parabolic factorization") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            auto reps = coset_reps(ParabolicRank{n, k}, CosetSide::Right);
            auto members = subgroup_elements(GenSet::parabolic(ParabolicRank{n, k}));
            for (const auto& x : reps)
                for (const auto& v : members)
                    CHECK(v.compose(x).length() == v.length() + x.length());
        }
}

TEST_CASE("parabolic factorization against the exhaustive oracle") {
    // oracle: search all (v, x) pairs for the unique length-additive one
    for (const auto& w : all_permutations(3)) {
        auto [v, x] = parabolic_factorize(ParabolicRank{3, 2}, w, CosetSide::Right);
        int hits = 0;
        for (const auto& vv : subgroup_elements(GenSet::parabolic(ParabolicRank{3, 2})))
            for (const auto& xx : coset_reps(ParabolicRank{3, 2}, CosetSide::Right))
                if (vv.compose(xx) == w) {
                    ++hits;
                    CHECK(vv == v);
                    CHECK(xx == x);
                    CHECK(vv.length() + xx.length() == w.length());
                }
        CHECK(hits == 1);
    }

    Permutation s1s2 = Permutation::transposition(3, 1).compose(Permutation::transposition(3, 2));
    auto [v, x] = parabolic_factorize(ParabolicRank{3, 2}, s1s2, CosetSide::Right);
    CHECK(v == Permutation::transposition(3, 1));
    CHECK(x == Permutation::transposition(3, 2));

    Permutation s2s1 = Permutation::transposition(3, 2).compose(Permutation::transposition(3, 1));
    auto [v2, x2] = parabolic_factorize(ParabolicRank{3, 2}, s2s1, CosetSide::Right);
    CHECK(v2.is_identity());
    CHECK(x2 == s2s1);
}

TEST_CASE("members of the parabolic factor trivially") {
    for (const auto& w : subgroup_elements(GenSet::parabolic(ParabolicRank{4, 3}))) {
        auto [v, x] = parabolic_factorize(ParabolicRank{4, 3}, w, CosetSide::Right);
        CHECK(v == w);
        CHECK(x.is_identity());
    }
}

TEST_CASE("factorize then recompose is the identity, both sides") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& w : all_permutations(n)) {
                auto r = parabolic_factorize(ParabolicRank{n, k}, w, CosetSide::Right);
                CHECK(r.v.compose(r.x) == w);
                auto l = parabolic_factorize(ParabolicRank{n, k}, w, CosetSide::Left);
                CHECK(l.x.compose(l.v) == w);
                CHECK(l.v.length() + l.x.length() == w.length());
            }
}

TEST_CASE("double coset representatives") {
    auto reps = double_coset_reps(ParabolicRank{4, 3}, ParabolicRank{4, 2});
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].is_identity());
    CHECK(reps[1] == Permutation::transposition(4, 3));
    CHECK(reps[2] == Permutation::cycle_sba(4, 4, 2));

    // r = n-1 and r = n-2 give the same double cosets
    auto a = double_coset_reps(ParabolicRank{4, 3}, ParabolicRank{4, 0});
    auto b = double_coset_reps(ParabolicRank{4, 3}, ParabolicRank{4, 1});
    CHECK(a == b);

    auto whole = double_coset_reps(ParabolicRank{4, 4}, ParabolicRank{4, 4});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].is_identity());
}

TEST_CASE("mackey decomposition") {
    auto rep = mackey_check(ParabolicRank{4, 3}, ParabolicRank{4, 2});
    CHECK(rep.pass());
    long total = 0;
    for (const auto& blk : rep.blocks) total += static_cast<long>(blk.members.size());
    CHECK(total == 4);  // |X_{S_3}| inside S_4

    auto single = mackey_check(ParabolicRank{4, 4}, ParabolicRank{4, 2});
    CHECK(single.pass());
    REQUIRE(single.blocks.size() >= 1);

    CHECK(mackey_check(ParabolicRank{4, 3}, ParabolicRank{4, 1}).pass());
    for (int kj = 0; kj <= 4; ++kj)
        for (int kk = 0; kk <= 4; ++kk) CHECK(mackey_check(ParabolicRank{4, kj}, ParabolicRank{4, kk}).pass());
}
