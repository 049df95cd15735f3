#include "hecke/permutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hecke {

Permutation::Permutation(int n) : im_(n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    std::iota(im_.begin(), im_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
    Permutation w(n);
    w.im_ = std::move(images);
    return w;
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
    Permutation w(n);
    std::swap(w.im_[i - 1], w.im_[i]);
    return w;
}

Permutation Permutation::cycle_sba(int n, int b, int a) {
    if (!(1 <= a && a <= b && b <= n)) throw std::invalid_argument("need 1 <= a <= b <= n");
    Permutation w(n);
    // decreases each of a+1..b by one and sends a to b
    for (int i = a + 1; i <= b; ++i) w.im_[i - 1] = i - 1;
    w.im_[a - 1] = b;
    return w;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (im_[i] != i + 1) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& v) const {
    if (rank() != v.rank()) throw RankMismatch("composing permutations of different ranks");
    Permutation r(rank());
    for (int i = 0; i < rank(); ++i) r.im_[i] = im_[v.im_[i] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(rank());
    for (int i = 0; i < rank(); ++i) r.im_[im_[i] - 1] = i + 1;
    return r;
}

Permutation Permutation::right_mul_s(int i) const {
    if (i < 1 || i > rank() - 1) throw std::invalid_argument("generator index out of range");
    Permutation r = *this;
    std::swap(r.im_[i - 1], r.im_[i]);
    return r;
}

Permutation Permutation::left_mul_s(int i) const {
    if (i < 1 || i > rank() - 1) throw std::invalid_argument("generator index out of range");
    Permutation r = *this;
    for (auto& v : r.im_) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return r;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = i + 1; j < rank(); ++j)
            if (im_[i] > im_[j]) ++inv;
    return inv;
}

bool Permutation::has_left_descent(int i) const {
    // length(s_i w) < length(w) iff i+1 appears before i in the one-line row
    // of w^{-1}, i.e. w^{-1}(i) > w^{-1}(i+1)
    int pos_i = 0, pos_i1 = 0;
    for (int j = 0; j < rank(); ++j) {
        if (im_[j] == i) pos_i = j;
        if (im_[j] == i + 1) pos_i1 = j;
    }
    return pos_i > pos_i1;
}

std::vector<int> Permutation::lex_min_reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    while (!w.is_identity()) {
        for (int i = 1; i <= w.rank() - 1; ++i) {
            if (w.has_left_descent(i)) {
                word.push_back(i);
                w = w.left_mul_s(i);
                break;
            }
        }
    }
    return word;
}

Permutation Permutation::embed(int N) const {
    if (N < rank()) throw std::invalid_argument("cannot embed into a smaller rank");
    Permutation r(N);
    for (int i = 0; i < rank(); ++i) r.im_[i] = im_[i];
    return r;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << im_[i];
    os << "]";
    return os.str();
}

Permutation CoxWord::evaluate() const {
    Permutation w(n);
    for (int l : letters) w = w.right_mul_s(l);
    return w;
}

namespace {

// deletion pair via the exchange condition: if the word is not reduced,
// find the first position where the running length drops; the letter there
// can be traded against an earlier one
bool shorten_once(CoxWord& word) {
    const int n = word.n;
    Permutation u(n);
    for (std::size_t k = 0; k < word.letters.size(); ++k) {
        int s = word.letters[k];
        Permutation us = u.right_mul_s(s);
        if (us.length() < u.length()) {
            // u * s = product of the prefix with one earlier letter removed
            for (std::size_t i = 0; i < k; ++i) {
                Permutation test(n);
                for (std::size_t j = 0; j < k; ++j) {
                    if (j == i) continue;
                    test = test.right_mul_s(word.letters[j]);
                }
                if (test == us) {
                    std::vector<int> rest(word.letters);
                    rest.erase(rest.begin() + k);
                    rest.erase(rest.begin() + i);
                    word.letters = std::move(rest);
                    return true;
                }
            }
            throw std::logic_error("exchange condition failed");
        }
        u = us;
    }
    return false;
}

}  // namespace

WordProblemResult word_problem(const CoxWord& word) {
    CoxWord w = word;
    bool shortened = false;
    while (shorten_once(w)) shortened = true;
    return {!shortened, w};
}

std::vector<std::vector<int>> braid_neighbours(const std::vector<int>& word) {
    std::vector<std::vector<int>> out;
    // commutation st -> ts for |s-t| > 1
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (std::abs(word[i] - word[i + 1]) > 1) {
            auto v = word;
            std::swap(v[i], v[i + 1]);
            out.push_back(std::move(v));
        }
    }
    // braid sts -> tst for |s-t| = 1
    for (std::size_t i = 0; i + 2 < word.size(); ++i) {
        if (word[i] == word[i + 2] && std::abs(word[i] - word[i + 1]) == 1) {
            auto v = word;
            std::swap(v[i], v[i + 1]);
            v[i + 2] = v[i];
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::set<std::vector<int>> matsumoto_orbit(const Permutation& w, std::size_t max_orbit) {
    std::set<std::vector<int>> orbit;
    std::deque<std::vector<int>> queue;
    std::vector<int> seed = w.lex_min_reduced_word();
    orbit.insert(seed);
    queue.push_back(seed);
    while (!queue.empty()) {
        std::vector<int> cur = std::move(queue.front());
        queue.pop_front();
        for (auto& nb : braid_neighbours(cur)) {
            if (orbit.insert(nb).second) {
                if (orbit.size() > max_orbit)
                    throw GuardExceeded("reduced-word orbit larger than the guard limit");
                queue.push_back(std::move(nb));
            }
        }
    }
    return orbit;
}

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

const std::vector<Permutation>& all_permutations(int n) {
    if (n < 0 || n > 9) throw GuardExceeded("permutation enumeration limited to rank <= 9");
    static std::mutex mu;
    static std::map<int, std::vector<Permutation>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> perms;
    perms.reserve(factorial(n));
    do {
        perms.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    });
    return cache.emplace(n, std::move(perms)).first->second;
}

}  // namespace hecke
