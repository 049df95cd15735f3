#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct RankMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of S_n in one-line notation [w(1),...,w(n)], values 1..n.
class Permutation {
public:
    explicit Permutation(int n);  // identity
    static Permutation from_one_line(std::vector<int> images);
    /// the adjacent transposition s_i = (i, i+1), 1 <= i <= n-1
    static Permutation transposition(int n, int i);
    /// s_ba = s_{b-1} s_{b-2} ... s_a = the cycle (b, b-1, ..., a); s_aa = e
    static Permutation cycle_sba(int n, int b, int a);

    int rank() const { return static_cast<int>(im_.size()); }
    int operator()(int i) const { return im_[i - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return im_; }

    bool is_identity() const;
    Permutation compose(const Permutation& v) const;  // i -> (*this)(v(i))
    Permutation inverse() const;
    Permutation right_mul_s(int i) const;  // w * s_i
    Permutation left_mul_s(int i) const;   // s_i * w

    /// inversion count, equals the Coxeter length
    int length() const;
    bool has_right_descent(int i) const { return im_[i - 1] > im_[i]; }
    bool has_left_descent(int i) const;  // length(s_i w) < length(w)

    /// lexicographically smallest reduced word (letters multiply left to right)
    std::vector<int> lex_min_reduced_word() const;

    /// extend to rank N fixing the new points
    Permutation embed(int N) const;

    bool operator==(const Permutation& o) const { return im_ == o.im_; }
    std::strong_ordering operator<=>(const Permutation& o) const { return im_ <=> o.im_; }

    std::string str() const;  // "[3,1,2]"

private:
    std::vector<int> im_;
};

/// Word in the Coxeter generators s_1..s_{n-1} of S_n.
struct CoxWord {
    int n = 0;
    std::vector<int> letters;

    Permutation evaluate() const;
    bool operator==(const CoxWord& o) const = default;
};

struct WordProblemResult {
    bool is_reduced;
    CoxWord shortened;
};

/// Shortens a word to a reduced one representing the same element, by
/// repeatedly locating a deletion pair (exchange condition); a word is
/// reduced exactly when no such shortening applies.
WordProblemResult word_problem(const CoxWord& word);

/// All reduced words for w, as the closure of one reduced word under braid
/// and commutation moves. Throws GuardExceeded past max_orbit.
std::set<std::vector<int>> matsumoto_orbit(const Permutation& w, std::size_t max_orbit = 1000000);

/// single braid/commutation moves applicable in place; used by the orbit
/// closure and by orbit-connectivity tests
std::vector<std::vector<int>> braid_neighbours(const std::vector<int>& word);

/// All of S_n in canonical order: by length, ties by lexicographic one-line.
/// Cached per rank.
const std::vector<Permutation>& all_permutations(int n);

std::int64_t factorial(int n);

}  // namespace hecke
