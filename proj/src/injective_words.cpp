#include "hecke/injective_words.hpp"

#include <algorithm>
#include <map>

namespace hecke {

namespace {

void require_q_one(const ScalarField* f) {
    if (!f->q_is_one())
        throw std::invalid_argument("complex of injective words requires a field with q = 1");
}

void gather_words(int n, int length, std::vector<int>& cur, std::vector<bool>& used,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == length) {
        out.push_back(cur);
        return;
    }
    for (int a = 1; a <= n; ++a) {
        if (used[a]) continue;
        used[a] = true;
        cur.push_back(a);
        gather_words(n, length, cur, used, out);
        cur.pop_back();
        used[a] = false;
    }
}

}  // namespace

std::vector<std::vector<int>> injective_words(int n, int length) {
    std::vector<std::vector<int>> out;
    if (length < 0 || length > n) return out;
    std::vector<int> cur;
    std::vector<bool> used(n + 1, false);
    gather_words(n, length, cur, used, out);
    return out;  // recursion emits in lexicographic order
}

FreeChainComplex build_C(int n, const ScalarField* f) {
    require_q_one(f);
    std::vector<std::vector<std::vector<int>>> words;  // per degree r = -1..n-1
    std::vector<int> dims;
    for (int r = -1; r <= n - 1; ++r) {
        words.push_back(injective_words(n, r + 1));
        dims.push_back(static_cast<int>(words.back().size()));
    }
    std::vector<std::map<std::vector<int>, int>> index(words.size());
    for (std::size_t k = 0; k < words.size(); ++k)
        for (int i = 0; i < static_cast<int>(words[k].size()); ++i) index[k].emplace(words[k][i], i);

    std::vector<ScalarMatrix> bnds;
    for (int r = 0; r <= n - 1; ++r) {
        ScalarMatrix m(f, dims[r], dims[r + 1]);
        for (int col = 0; col < dims[r + 1]; ++col) {
            const auto& w = words[r + 1][col];
            for (int j = 0; j <= r; ++j) {
                std::vector<int> del = w;
                del.erase(del.begin() + j);
                Scalar sign = (j % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                int row = index[r].at(del);
                m.at(row, col) += sign;
            }
        }
        bnds.push_back(std::move(m));
    }
    return FreeChainComplex(f, -1, std::move(dims), std::move(bnds));
}

FreeChainComplex build_Cprime(int n, const ScalarField* f) {
    require_q_one(f);
    std::vector<InducedModule> mods;
    std::vector<int> dims;
    for (int r = -1; r <= n - 1; ++r) {
        mods.emplace_back(n, n - r - 1, f);
        dims.push_back(mods.back().dim());
    }
    std::vector<ScalarMatrix> bnds;
    for (int r = 0; r <= n - 1; ++r) {
        const InducedModule& src = mods[r + 1];
        const InducedModule& dst = mods[r];
        ScalarMatrix m(f, dst.dim(), src.dim());
        for (int col = 0; col < src.dim(); ++col) {
            const Permutation& x = src.basis()[col];
            for (int j = 0; j <= r; ++j) {
                Permutation moved = x.compose(Permutation::cycle_sba(n, n - r + j, n - r));
                auto [row, coeff] = dst.reduce_tensor(moved);  // coeff = 1 at q = 1
                Scalar sign = (j % 2 == 0) ? coeff : -coeff;
                m.at(row, col) += sign;
            }
        }
        bnds.push_back(std::move(m));
    }
    return FreeChainComplex(f, -1, std::move(dims), std::move(bnds));
}

ChainMap theta(int n, const FreeChainComplex& cprime, const FreeChainComplex& c) {
    const ScalarField* f = cprime.field();
    require_q_one(f);
    ChainMap map{&cprime, &c, {}};
    for (int r = -1; r <= n - 1; ++r) {
        InducedModule mod(n, n - r - 1, f);
        auto words = injective_words(n, r + 1);
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < static_cast<int>(words.size()); ++i) index.emplace(words[i], i);
        ScalarMatrix m(f, static_cast<int>(words.size()), mod.dim());
        for (int col = 0; col < mod.dim(); ++col) {
            const Permutation& sigma = mod.basis()[col];
            std::vector<int> w;
            for (int i = n - r; i <= n; ++i) w.push_back(sigma(i));
            m.at(index.at(w), col) = Scalar::one(f);
        }
        map.blocks.emplace(r, std::move(m));
    }
    return map;
}

}  // namespace hecke
