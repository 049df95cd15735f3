#include "hecke/cosets.hpp"

#include <algorithm>
#include <set>

namespace hecke {

GenSet GenSet::parabolic(const ParabolicRank& P) {
    if (P.k < 0 || P.k > P.n) throw std::invalid_argument("parabolic rank out of range");
    GenSet T{P.n, {}};
    for (int i = 1; i <= P.k - 1; ++i) T.gens.push_back(i);
    return T;
}

std::vector<Permutation> subgroup_elements(const GenSet& T) {
    // W_T is the direct product of symmetric groups on the runs of
    // consecutive generators; points i, i+1 share a run iff s_i is in T
    std::vector<int> block(T.n + 1, 0);
    int b = 0;
    for (int i = 1; i <= T.n; ++i) {
        block[i] = b;
        bool joined = false;
        for (int g : T.gens)
            if (g == i) joined = true;
        if (!joined) ++b;
    }
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(T.n)) {
        bool ok = true;
        for (int i = 1; i <= T.n && ok; ++i)
            if (block[w(i)] != block[i]) ok = false;
        if (ok) out.push_back(w);
    }
    return out;
}

bool is_right_distinguished(const Permutation& w, const GenSet& T) {
    for (int g : T.gens)
        if (w.has_left_descent(g)) return false;
    return true;
}

bool is_left_distinguished(const Permutation& w, const GenSet& T) {
    for (int g : T.gens)
        if (w.has_right_descent(g)) return false;
    return true;
}

std::vector<Permutation> distinguished_reps(const GenSet& T, CosetSide side) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(T.n)) {
        bool keep = side == CosetSide::Right ? is_right_distinguished(w, T)
                                             : is_left_distinguished(w, T);
        if (keep) out.push_back(w);
    }
    return out;
}

std::vector<Permutation> distinguished_reps_in(const GenSet& K, const GenSet& T, CosetSide side) {
    std::vector<Permutation> out;
    for (const auto& w : subgroup_elements(K)) {
        bool keep = side == CosetSide::Right ? is_right_distinguished(w, T)
                                             : is_left_distinguished(w, T);
        if (keep) out.push_back(w);
    }
    return out;
}

std::vector<Permutation> coset_reps(const ParabolicRank& P, CosetSide side) {
    return distinguished_reps(GenSet::parabolic(P), side);
}

Factorization parabolic_factorize(const ParabolicRank& P, const Permutation& w, CosetSide side) {
    if (w.rank() != P.n) throw RankMismatch("permutation rank does not match the parabolic");
    int k = std::max(P.k, 1);
    if (side == CosetSide::Right) {
        // x carries w's one-line row with the values 1..k re-sorted into
        // increasing order along their positions; v permutes 1..k
        std::vector<int> xline = w.one_line();
        std::vector<std::pair<int, int>> small;  // (position, value)
        for (int i = 1; i <= P.n; ++i)
            if (w(i) <= k) small.push_back({i, w(i)});
        std::vector<int> vline(P.n);
        for (int i = 0; i < P.n; ++i) vline[i] = i + 1;
        for (std::size_t j = 0; j < small.size(); ++j) {
            xline[small[j].first - 1] = static_cast<int>(j) + 1;
            vline[j] = small[j].second;
        }
        Permutation x = Permutation::from_one_line(std::move(xline));
        Permutation v = Permutation::from_one_line(std::move(vline));
        return {v, x};
    }
    Factorization f = parabolic_factorize(P, w.inverse(), CosetSide::Right);
    return {f.v.inverse(), f.x.inverse()};
}

std::vector<Permutation> double_coset_reps(const GenSet& J, const GenSet& K) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(J.n))
        if (is_right_distinguished(w, J) && is_left_distinguished(w, K)) out.push_back(w);
    return out;
}

std::vector<Permutation> double_coset_reps(const ParabolicRank& J, const ParabolicRank& K) {
    return double_coset_reps(GenSet::parabolic(J), GenSet::parabolic(K));
}

GenSet conjugate_into_gens(const GenSet& J, const Permutation& d, bool d_on_left) {
    // J^d = {d^{-1} s d} when d_on_left is false, dJ = {d s d^{-1}} otherwise;
    // keep only those conjugates that are again adjacent transpositions
    GenSet out{J.n, {}};
    Permutation conj = d_on_left ? d : d.inverse();
    for (int g : J.gens) {
        int a = conj(g);
        int b = conj(g + 1);
        if (a > b) std::swap(a, b);
        if (b == a + 1) out.gens.push_back(a);
    }
    std::sort(out.gens.begin(), out.gens.end());
    return out;
}

namespace {

bool verify_partition(const std::vector<Permutation>& whole,
                      const std::vector<MackeyBlock>& blocks, bool& disjoint, bool& covers) {
    std::set<Permutation> seen;
    disjoint = true;
    for (const auto& blk : blocks)
        for (const auto& w : blk.members)
            if (!seen.insert(w).second) disjoint = false;
    covers = seen.size() == whole.size();
    if (covers)
        for (const auto& w : whole)
            if (!seen.count(w)) covers = false;
    return disjoint && covers;
}

}  // namespace

MackeyReport mackey_check(const ParabolicRank& Jp, const ParabolicRank& Kp) {
    GenSet J = GenSet::parabolic(Jp);
    GenSet K = GenSet::parabolic(Kp);
    MackeyReport report;

    // X_J = union over d in X_{JK} of d * X^K_{J^d cap K}
    std::vector<Permutation> XJ = distinguished_reps(J, CosetSide::Right);
    report.lengths_add = true;
    for (const auto& d : double_coset_reps(J, K)) {
        GenSet Jd = conjugate_into_gens(J, d, false);
        GenSet inter{J.n, {}};
        std::set_intersection(Jd.gens.begin(), Jd.gens.end(), K.gens.begin(), K.gens.end(),
                              std::back_inserter(inter.gens));
        MackeyBlock blk{d, {}};
        for (const auto& y : distinguished_reps_in(K, inter, CosetSide::Right)) {
            Permutation prod = d.compose(y);
            if (prod.length() != d.length() + y.length()) report.lengths_add = false;
            blk.members.push_back(prod);
        }
        report.blocks.push_back(std::move(blk));
    }
    verify_partition(XJ, report.blocks, report.disjoint, report.covers);

    // mirrored version: X_J^{-1} = union over d in X_{KJ} of (X^K_{K cap dJ})^{-1} * d
    std::vector<Permutation> XJinv = distinguished_reps(J, CosetSide::Left);
    std::vector<MackeyBlock> left_blocks;
    for (const auto& d : double_coset_reps(K, J)) {
        GenSet dJ = conjugate_into_gens(J, d, true);
        GenSet inter{J.n, {}};
        std::set_intersection(dJ.gens.begin(), dJ.gens.end(), K.gens.begin(), K.gens.end(),
                              std::back_inserter(inter.gens));
        MackeyBlock blk{d, {}};
        for (const auto& y : distinguished_reps_in(K, inter, CosetSide::Left)) {
            Permutation prod = y.compose(d);
            if (prod.length() != d.length() + y.length()) report.lengths_add = false;
            blk.members.push_back(prod);
        }
        left_blocks.push_back(std::move(blk));
    }
    bool disjoint2 = false, covers2 = false;
    verify_partition(XJinv, left_blocks, disjoint2, covers2);
    report.disjoint = report.disjoint && disjoint2;
    report.covers = report.covers && covers2;
    return report;
}

}  // namespace hecke
