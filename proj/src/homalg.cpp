#include "hecke/homalg.hpp"

#include <algorithm>
#include <deque>

namespace hecke {

namespace {

int perm_position(int n, const Permutation& w) {
    const auto& all = all_permutations(n);
    auto it = std::lower_bound(all.begin(), all.end(), w,
                               [](const Permutation& a, const Permutation& b) {
                                   int la = a.length(), lb = b.length();
                                   if (la != lb) return la < lb;
                                   return a < b;
                               });
    return static_cast<int>(it - all.begin());
}

std::vector<Scalar> hecke_to_coords(const HeckeElement& h) {
    int n = h.rank();
    std::vector<Scalar> out(factorial(n), Scalar::zero(h.field()));
    for (const auto& [w, c] : h.coords()) out[perm_position(n, w)] = c;
    return out;
}

HeckeElement coords_to_hecke(int n, const ScalarField* f, const std::vector<Scalar>& v) {
    const auto& all = all_permutations(n);
    HeckeElement h(n, f);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) h.add_term(all[i], v[i]);
    return h;
}

/// vector-space matrix of the module map P_d -> P_{d-1} presented by M
ScalarMatrix module_map_matrix(int n, const ScalarField* f, const HeckeMatrix& M) {
    int rows = static_cast<int>(M.size());
    int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    long sz = factorial(n);
    ScalarMatrix out(f, static_cast<int>(rows * sz), static_cast<int>(cols * sz));
    const auto& all = all_permutations(n);
    for (int i = 0; i < cols; ++i) {
        for (long wi = 0; wi < sz; ++wi) {
            long col = i * sz + wi;
            for (int j = 0; j < rows; ++j) {
                if (M[j][i].is_zero()) continue;
                HeckeElement moved = M[j][i].left_mul_basis(all[wi]);
                for (const auto& [u, c] : moved.coords())
                    out.at(static_cast<int>(j * sz + perm_position(n, u)), static_cast<int>(col)) = c;
            }
        }
    }
    return out;
}

/// augmentation row: T_w -> q^{l(w)}
ScalarMatrix augmentation_matrix(int n, const ScalarField* f) {
    long sz = factorial(n);
    ScalarMatrix out(f, 1, static_cast<int>(sz));
    const auto& all = all_permutations(n);
    for (long wi = 0; wi < sz; ++wi)
        out.at(0, static_cast<int>(wi)) = Scalar::q_power(f, all[wi].length());
    return out;
}

/// left multiplication by T_i on coordinates of H_n^k
std::vector<Scalar> left_gen_action(int n, const ScalarField* f, int gen,
                                    const std::vector<Scalar>& v) {
    long sz = factorial(n);
    const auto& all = all_permutations(n);
    std::vector<Scalar> out(v.size(), Scalar::zero(f));
    Scalar q = Scalar::q_power(f, 1);
    Scalar qm1 = q - Scalar::one(f);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        long block = static_cast<long>(idx) / sz;
        long wi = static_cast<long>(idx) % sz;
        const Permutation& w = all[wi];
        Permutation sw = w.left_mul_s(gen);
        long swi = perm_position(n, sw);
        if (sw.length() > w.length()) {
            out[block * sz + swi] += v[idx];
        } else {
            out[idx] += v[idx] * qm1;
            out[block * sz + swi] += v[idx] * q;
        }
    }
    return out;
}

long support_size(const std::vector<Scalar>& v) {
    long s = 0;
    for (const auto& x : v)
        if (!x.is_zero()) ++s;
    return s;
}

ScalarMatrix collapse(const ScalarField* f, const HeckeMatrix& M) {
    int rows = static_cast<int>(M.size());
    int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    ScalarMatrix out(f, rows, cols);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) out.at(j, i) = character(CharacterKind::Trivial, M[j][i]);
    return out;
}

}  // namespace

FreeResolution build_resolution(int n, const ScalarField* f, int d_max, GeneratorOrder order,
                                bool guard_override) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (!guard_override && n > 4)
        throw GuardExceeded("resolution rank guard (n <= 4); pass the override to proceed");
    if (!guard_override && d_max > 8)
        throw GuardExceeded("resolution degree guard (d_max <= 8); pass the override to proceed");
    FreeResolution res{n, f, d_max, {1}, {}, {}, {}};
    res.vect.push_back(augmentation_matrix(n, f));
    long sz = factorial(n);

    for (int d = 1; d <= d_max + 1; ++d) {
        const ScalarMatrix& prev = res.vect.back();
        auto kernel = nullspace(prev);
        res.kernel_dims.push_back(static_cast<long>(kernel.size()));
        std::stable_sort(kernel.begin(), kernel.end(),
                         [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
                             long sa = support_size(a), sb = support_size(b);
                             return order == GeneratorOrder::SmallestSupportFirst ? sa < sb
                                                                                  : sa > sb;
                         });
        SpanBasis span(f, prev.cols());
        std::vector<std::vector<Scalar>> gens;
        for (const auto& cand : kernel) {
            if (span.contains(cand)) continue;
            gens.push_back(cand);
            std::deque<std::vector<Scalar>> queue;
            span.insert(cand);
            queue.push_back(cand);
            while (!queue.empty()) {
                std::vector<Scalar> cur = std::move(queue.front());
                queue.pop_front();
                for (int g = 1; g <= n - 1; ++g) {
                    std::vector<Scalar> moved = left_gen_action(n, f, g, cur);
                    if (span.insert(moved)) queue.push_back(std::move(moved));
                }
            }
            if (span.dim() == static_cast<long>(kernel.size())) break;
        }
        if (span.dim() != static_cast<long>(kernel.size()))
            throw std::logic_error("generator extraction failed to span the kernel");

        int prev_rank = res.ranks.back();
        res.ranks.push_back(static_cast<int>(gens.size()));
        HeckeMatrix M(prev_rank, HeckeVector());
        for (int j = 0; j < prev_rank; ++j) {
            for (const auto& g : gens) {
                std::vector<Scalar> blockv(g.begin() + j * sz, g.begin() + (j + 1) * sz);
                M[j].push_back(coords_to_hecke(n, f, blockv));
            }
        }
        res.maps.push_back(M);
        res.vect.push_back(module_map_matrix(n, f, M));

        // exactness audit: the image of the new map must fill the kernel
        long image_rank = rank(res.vect.back());
        if (image_rank != static_cast<long>(kernel.size()))
            throw std::logic_error("resolution is not exact at degree " + std::to_string(d - 1));
    }
    res.kernel_dims.push_back(res.vect.back().cols() - rank(res.vect.back()));

    // composite-zero audit in Hecke coordinates
    for (std::size_t d = 1; d < res.maps.size(); ++d) {
        const HeckeMatrix& M = res.maps[d];      // P_{d+1} -> P_d
        const HeckeMatrix& N = res.maps[d - 1];  // P_d -> P_{d-1}
        int mid = res.ranks[d];
        int lo = res.ranks[d - 1];
        int hi = res.ranks[d + 1];
        for (int i = 0; i < hi; ++i)
            for (int k = 0; k < lo; ++k) {
                HeckeElement acc(n, f);
                for (int j = 0; j < mid; ++j) acc = acc + mult(M[j][i], N[k][j]);
                if (!acc.is_zero()) throw std::logic_error("composite of resolution maps is nonzero");
            }
    }
    for (int i = 0; i < res.ranks[1]; ++i)
        if (!character(CharacterKind::Trivial, res.maps[0][0][i]).is_zero())
            throw std::logic_error("augmentation does not kill the first syzygies");
    return res;
}

std::vector<ScalarMatrix> collapsed_complex(const FreeResolution& res) {
    std::vector<ScalarMatrix> out;
    for (const auto& M : res.maps) out.push_back(collapse(res.f, M));
    return out;
}

TorTable tor_table(const FreeResolution& res) {
    auto deltas = collapsed_complex(res);
    TorTable t;
    for (int d = 0; d <= res.d_max; ++d) {
        long rk_d = d == 0 ? 0 : rank(deltas[d - 1]);
        long rk_d1 = rank(deltas[d]);
        t.dims.push_back(res.ranks[d] - rk_d - rk_d1);
    }
    return t;
}

ExtTable ext_table(const FreeResolution& res) {
    auto deltas = collapsed_complex(res);
    ExtTable t;
    for (int d = 0; d <= res.d_max; ++d) {
        // coboundaries are the transposed collapsed maps
        long rk_in = d == 0 ? 0 : rank(deltas[d - 1].transpose());
        long rk_out = rank(deltas[d].transpose());
        t.dims.push_back(res.ranks[d] - rk_in - rk_out);
    }
    return t;
}

ScalarMatrix induced_on_homology(const ScalarMatrix& down_src, const ScalarMatrix& up_src,
                                 const ScalarMatrix& down_dst, const ScalarMatrix& up_dst,
                                 const ScalarMatrix& block) {
    const ScalarField* f = block.field();
    auto cycles_src = nullspace(down_src);
    auto bound_src = column_space_basis(up_src);
    SpanBasis span_src(f, down_src.cols());
    for (const auto& b : bound_src) span_src.insert(b);
    std::vector<std::vector<Scalar>> reps_src;
    for (const auto& z : cycles_src)
        if (span_src.insert(z)) reps_src.push_back(z);

    auto cycles_dst = nullspace(down_dst);
    auto bound_dst = column_space_basis(up_dst);
    SpanBasis span_dst(f, down_dst.cols());
    for (const auto& b : bound_dst) span_dst.insert(b);
    std::vector<std::vector<Scalar>> reps_dst;
    for (const auto& z : cycles_dst)
        if (span_dst.insert(z)) reps_dst.push_back(z);

    // express block * rep in the basis (boundaries | reps) of the target
    int bcols = static_cast<int>(bound_dst.size() + reps_dst.size());
    ScalarMatrix A(f, down_dst.cols(), bcols);
    for (std::size_t j = 0; j < bound_dst.size(); ++j)
        for (int i = 0; i < down_dst.cols(); ++i) A.at(i, static_cast<int>(j)) = bound_dst[j][i];
    for (std::size_t j = 0; j < reps_dst.size(); ++j)
        for (int i = 0; i < down_dst.cols(); ++i)
            A.at(i, static_cast<int>(bound_dst.size() + j)) = reps_dst[j][i];

    ScalarMatrix out(f, static_cast<int>(reps_dst.size()), static_cast<int>(reps_src.size()));
    for (std::size_t j = 0; j < reps_src.size(); ++j) {
        std::vector<Scalar> img = block.apply(reps_src[j]);
        auto x = solve(A, img);
        if (!x) throw std::runtime_error("image of a cycle is not a cycle in the target");
        for (std::size_t i = 0; i < reps_dst.size(); ++i)
            out.at(static_cast<int>(i), static_cast<int>(j)) = (*x)[bound_dst.size() + i];
    }
    return out;
}

StabilizationResult stabilization_map(int n, const ScalarField* f, int d_max, Pivoting lift_pivot,
                                      GeneratorOrder order, bool guard_override) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    FreeResolution small = build_resolution(n - 1, f, d_max, order, guard_override);
    FreeResolution big = build_resolution(n, f, d_max, order, guard_override);
    long sz = factorial(n);

    // lift the identity of t through the restricted resolution
    std::vector<std::vector<HeckeVector>> lift(d_max + 2);
    lift[0] = {HeckeVector{HeckeElement::unit(n, f)}};
    for (int d = 1; d <= d_max + 1; ++d) {
        const HeckeMatrix& Msmall = small.maps[d - 1];
        lift[d].resize(small.ranks[d]);
        for (int i = 0; i < small.ranks[d]; ++i) {
            // target b_i = sum_j M'[j][i] * f_{d-1}(e'_j)
            HeckeVector target(big.ranks[d - 1], HeckeElement(n, f));
            for (int j = 0; j < small.ranks[d - 1]; ++j) {
                HeckeElement coeff = Msmall[j][i].embed(n);
                for (int k = 0; k < big.ranks[d - 1]; ++k) {
                    if (lift[d - 1][j][k].is_zero() || coeff.is_zero()) continue;
                    target[k] = target[k] + mult(coeff, lift[d - 1][j][k]);
                }
            }
            std::vector<Scalar> rhs(big.ranks[d - 1] * sz, Scalar::zero(f));
            for (int k = 0; k < big.ranks[d - 1]; ++k) {
                std::vector<Scalar> coords = hecke_to_coords(target[k]);
                std::copy(coords.begin(), coords.end(), rhs.begin() + k * sz);
            }
            auto y = solve(big.vect[d], rhs, lift_pivot);
            if (!y) throw std::runtime_error("chain lift infeasible");
            HeckeVector img(big.ranks[d], HeckeElement(n, f));
            for (int k = 0; k < big.ranks[d]; ++k) {
                std::vector<Scalar> blockv(y->begin() + k * sz, y->begin() + (k + 1) * sz);
                img[k] = coords_to_hecke(n, f, blockv);
            }
            lift[d][i] = std::move(img);
        }
    }

    // collapse to scalar chain maps and induce on homology
    auto deltas_small = collapsed_complex(small);
    auto deltas_big = collapsed_complex(big);
    StabilizationResult out{n, f, d_max, {}, {}, {}, {}, {}, {}};
    TorTable tor_small = tor_table(small), tor_big = tor_table(big);
    ExtTable ext_small = ext_table(small), ext_big = ext_table(big);
    out.tor_dims_small = tor_small.dims;
    out.tor_dims_big = tor_big.dims;
    out.ext_dims_small = ext_small.dims;
    out.ext_dims_big = ext_big.dims;

    for (int d = 0; d <= d_max; ++d) {
        ScalarMatrix ghat(f, big.ranks[d], small.ranks[d]);
        for (int i = 0; i < small.ranks[d]; ++i)
            for (int k = 0; k < big.ranks[d]; ++k)
                ghat.at(k, i) = character(CharacterKind::Trivial, lift[d][i][k]);
        ScalarMatrix down_src = d == 0 ? ScalarMatrix(f, 0, small.ranks[0]) : deltas_small[d - 1];
        ScalarMatrix down_dst = d == 0 ? ScalarMatrix(f, 0, big.ranks[0]) : deltas_big[d - 1];
        out.tor_maps.push_back(
            induced_on_homology(down_src, deltas_small[d], down_dst, deltas_big[d], ghat));
        // cohomology: ker(transpose of the next map) over im(transpose of this one)
        ScalarMatrix up_src_t = down_dst.transpose();   // E_d on the H_n side
        ScalarMatrix up_dst_t = down_src.transpose();   // E_d on the H_{n-1} side
        out.ext_maps.push_back(induced_on_homology(deltas_big[d].transpose(), up_src_t,
                                                   deltas_small[d].transpose(), up_dst_t,
                                                   ghat.transpose()));
    }
    return out;
}

StabilityReport stability_check(int n, const ScalarField* f, int d_max, bool guard_override) {
    StabilizationResult s = stabilization_map(n, f, d_max, Pivoting::ByColumn,
                                              GeneratorOrder::SmallestSupportFirst, guard_override);
    StabilityReport rep{n, d_max, {}};
    for (int d = 0; d <= d_max; ++d) {
        StabilityDegree deg;
        deg.d = d;
        deg.dim_small = s.tor_dims_small[d];
        deg.dim_big = s.tor_dims_big[d];
        deg.rank_tor = rank(s.tor_maps[d]);
        deg.rank_ext = rank(s.ext_maps[d]);
        deg.in_range = 2 * d <= n - 1;
        deg.tor_iso = deg.dim_small == deg.dim_big && deg.rank_tor == deg.dim_big;
        deg.ext_iso = s.ext_dims_small[d] == s.ext_dims_big[d] && deg.rank_ext == s.ext_dims_small[d];
        rep.degrees.push_back(deg);
    }
    return rep;
}

}  // namespace hecke
