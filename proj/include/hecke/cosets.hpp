#pragma once

#include <vector>

#include "hecke/permutation.hpp"

namespace hecke {

/// The parabolic S_k = <s_1,...,s_{k-1}> inside S_n. k = 0 and k = 1 both
/// denote the trivial subgroup (empty generating set).
struct ParabolicRank {
    int n;
    int k;
};

enum class CosetSide { Left, Right };

/// Generating subset of {s_1,...,s_{n-1}}, not necessarily an initial segment;
/// needed for the Mackey blocks where conjugated parabolics have gaps.
struct GenSet {
    int n;
    std::vector<int> gens;  // strictly increasing generator indices

    static GenSet parabolic(const ParabolicRank& P);
};

/// members of the special subgroup W_T, canonical order
std::vector<Permutation> subgroup_elements(const GenSet& T);

bool is_right_distinguished(const Permutation& w, const GenSet& T);
bool is_left_distinguished(const Permutation& w, const GenSet& T);

/// X_T (right side) or X_T^{-1} (left side), over all of S_n, canonical order
std::vector<Permutation> distinguished_reps(const GenSet& T, CosetSide side);

/// Distinguished representatives of W_T-cosets inside the subgroup W_K:
/// X^K_T (right) or its inverse set (left); T must be contained in K.
std::vector<Permutation> distinguished_reps_in(const GenSet& K, const GenSet& T, CosetSide side);

/// spec-facing variant on parabolic ranks
std::vector<Permutation> coset_reps(const ParabolicRank& P, CosetSide side);

struct Factorization {
    Permutation v;  // member of the parabolic
    Permutation x;  // distinguished representative
};

/// Right side: w = v * x with v in S_k, x in X_{S_k}; left side: w = x * v
/// with x in X_{S_k}^{-1}. Lengths add in either case.
Factorization parabolic_factorize(const ParabolicRank& P, const Permutation& w, CosetSide side);

/// X_{JK} = X_J with no reduced expression ending in K
std::vector<Permutation> double_coset_reps(const ParabolicRank& J, const ParabolicRank& K);
std::vector<Permutation> double_coset_reps(const GenSet& J, const GenSet& K);

/// conjugated generating sets J^d = d^{-1} J d and dJ = d J d^{-1},
/// intersected back into the generator alphabet
GenSet conjugate_into_gens(const GenSet& J, const Permutation& d, bool d_on_left);

struct MackeyBlock {
    Permutation d;
    std::vector<Permutation> members;  // the full block d * X^K_{J^d cap K} (or mirrored)
};

struct MackeyReport {
    bool disjoint = false;
    bool covers = false;
    bool lengths_add = false;
    std::vector<MackeyBlock> blocks;
    bool pass() const { return disjoint && covers && lengths_add; }
};

/// Verifies the double-coset decomposition of X_J into blocks d * X^K_{J^d cap K},
/// and the mirrored left-coset version; failure is recorded, not thrown.
MackeyReport mackey_check(const ParabolicRank& J, const ParabolicRank& K);

}  // namespace hecke
