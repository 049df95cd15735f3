#include "hecke/suites.hpp"

#include <chrono>
#include <random>

#include "hecke/cosets.hpp"
#include "hecke/d_complex.hpp"
#include "hecke/homalg.hpp"
#include "hecke/injective_words.hpp"

namespace hecke {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

Json perm_list_json(const std::vector<Permutation>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(p.str());
    return arr;
}

Json betti_json(const std::vector<std::pair<int, long>>& betti) {
    Json arr = Json::array();
    for (const auto& [d, b] : betti) {
        Json e;
        e["degree"] = d;
        e["betti"] = b;
        arr.push_back(e);
    }
    return arr;
}

}  // namespace

SuiteReport run_coxeter_suite(int n) {
    if (n < 1 || n > 7) throw GuardExceeded("coxeter suite supports 1 <= n <= 7");
    Stopwatch watch;
    SuiteReport rep;
    rep.suite = "coxeter";
    rep.params = Json{{"n", n}};

    // word problem: every element, straightened word padded with a square
    {
        long checked = 0, failures = 0;
        for (const auto& w : all_permutations(n)) {
            CoxWord canonical{n, w.lex_min_reduced_word()};
            auto direct = word_problem(canonical);
            if (!direct.is_reduced || !(direct.shortened == canonical)) ++failures;
            if (n >= 2) {
                CoxWord padded{n, {}};
                padded.letters.push_back(1);
                padded.letters.push_back(1);
                for (int l : canonical.letters) padded.letters.push_back(l);
                auto result = word_problem(padded);
                bool ok = !result.is_reduced &&
                          static_cast<int>(result.shortened.letters.size()) == w.length() &&
                          result.shortened.evaluate() == w;
                if (!ok) ++failures;
            }
            ++checked;
        }
        rep.add("word-problem-normal-forms", "Theorem 2.3", failures == 0,
                Json{{"elements", checked}, {"failures", failures}});
    }

    // deletion condition: exactly one of l(s_i w) = l(w) +- 1
    {
        long failures = 0;
        for (const auto& w : all_permutations(n))
            for (int i = 1; i <= n - 1; ++i) {
                int lw = w.length(), lsw = w.left_mul_s(i).length();
                if (lsw != lw + 1 && lsw != lw - 1) ++failures;
            }
        rep.add("deletion-condition", "Section 2.1", failures == 0, Json{{"failures", failures}});
    }

    // reduced-word orbit of the longest element
    {
        std::vector<int> line(n);
        for (int i = 0; i < n; ++i) line[i] = n - i;
        Permutation w0 = Permutation::from_one_line(line);
        auto orbit = matsumoto_orbit(w0);
        bool ok = true;
        for (const auto& word : orbit) {
            CoxWord cw{n, word};
            if (static_cast<int>(word.size()) != w0.length() || !(cw.evaluate() == w0)) ok = false;
        }
        // every member must touch another member by a single move
        if (orbit.size() > 1)
            for (const auto& word : orbit) {
                bool reachable = false;
                for (const auto& nb : braid_neighbours(word))
                    if (orbit.count(nb)) reachable = true;
                if (!reachable) ok = false;
            }
        rep.add("matsumoto-orbit-longest", "Theorem 2.2", ok,
                Json{{"orbit_size", orbit.size()}, {"length", w0.length()}});
    }

    // distinguished representatives of the top parabolic
    {
        std::vector<Permutation> expected;
        for (int j = n; j >= 1; --j) expected.push_back(Permutation::cycle_sba(n, n, j));
        std::sort(expected.begin(), expected.end(), [](const Permutation& a, const Permutation& b) {
            if (a.length() != b.length()) return a.length() < b.length();
            return a < b;
        });
        auto reps = coset_reps(ParabolicRank{n, n - 1}, CosetSide::Right);
        bool ok = reps == expected;
        rep.add("top-parabolic-reps", "Lemma 8.2", ok, Json{{"reps", perm_list_json(reps)}});
    }

    // sizes, canonical order, and the length-additivity characterization
    {
        bool ok = true;
        Json sizes = Json::array();
        for (int k = 0; k <= n; ++k) {
            auto reps = coset_reps(ParabolicRank{n, k}, CosetSide::Right);
            long expect = factorial(n) / factorial(std::max(k, 1));
            if (static_cast<long>(reps.size()) != expect) ok = false;
            sizes.push_back(reps.size());
            for (std::size_t i = 1; i < reps.size(); ++i) {
                bool ordered = reps[i - 1].length() < reps[i].length() ||
                               (reps[i - 1].length() == reps[i].length() && reps[i - 1] < reps[i]);
                if (!ordered) ok = false;
            }
            auto members = subgroup_elements(GenSet::parabolic(ParabolicRank{n, k}));
            for (const auto& x : reps)
                for (const auto& v : members)
                    if (v.compose(x).length() != v.length() + x.length()) ok = false;
        }
        rep.add("coset-reps-sizes-and-lengths", "Theorem 2.5", ok, Json{{"sizes", sizes}});
    }

    // unique factorization through distinguished representatives
    {
        bool ok = true;
        for (int k = 0; k <= n; ++k) {
            for (const auto& w : all_permutations(n)) {
                auto [v, x] = parabolic_factorize(ParabolicRank{n, k}, w, CosetSide::Right);
                if (!(v.compose(x) == w)) ok = false;
                if (v.length() + x.length() != w.length()) ok = false;
                if (!is_right_distinguished(x, GenSet::parabolic(ParabolicRank{n, k}))) ok = false;
                auto [vl, xl] = parabolic_factorize(ParabolicRank{n, k}, w, CosetSide::Left);
                if (!(xl.compose(vl) == w)) ok = false;
                if (vl.length() + xl.length() != w.length()) ok = false;
                if (!is_left_distinguished(xl, GenSet::parabolic(ParabolicRank{n, k}))) ok = false;
            }
        }
        rep.add("parabolic-factorization", "Theorem 2.5", ok, Json::object());
    }

    // double cosets of the top parabolic against the chain of parabolics
    {
        bool ok = true;
        for (int r = -1; r <= n - 1; ++r) {
            std::vector<Permutation> expected;
            int low = r <= n - 2 ? n - r - 1 : 1;
            for (int j = n; j >= low; --j) expected.push_back(Permutation::cycle_sba(n, n, j));
            std::sort(expected.begin(), expected.end(),
                      [](const Permutation& a, const Permutation& b) {
                          if (a.length() != b.length()) return a.length() < b.length();
                          return a < b;
                      });
            auto reps = double_coset_reps(ParabolicRank{n, n - 1}, ParabolicRank{n, n - r - 1});
            if (!(reps == expected)) ok = false;
        }
        auto whole = double_coset_reps(ParabolicRank{n, n}, ParabolicRank{n, n});
        if (!(whole.size() == 1 && whole[0].is_identity())) ok = false;
        rep.add("double-coset-reps", "Lemma 8.3", ok, Json::object());
    }

    // Mackey partitions over all parabolic pairs
    {
        bool ok = true;
        long pairs = 0;
        for (int kj = 0; kj <= n; ++kj)
            for (int kk = 0; kk <= n; ++kk) {
                auto mk = mackey_check(ParabolicRank{n, kj}, ParabolicRank{n, kk});
                if (!mk.pass()) ok = false;
                ++pairs;
            }
        rep.add("mackey-partitions", "Section 2.2", ok, Json{{"pairs", pairs}});
    }

    rep.duration_ms = watch.ms();
    return rep;
}

SuiteReport run_hecke_suite(int n, const ScalarField* f, int assoc_samples) {
    if (n < 1 || n > 6) throw GuardExceeded("hecke suite supports 1 <= n <= 6");
    Stopwatch watch;
    SuiteReport rep;
    rep.suite = "hecke";
    rep.params = Json{{"n", n}, {"field", f->descriptor}, {"assoc_samples", assoc_samples}};

    {
        TmovesReport tm = verify_tmoves(n, f);
        rep.add("tmoves-identities", "Proposition 6.2", tm.pass(),
                Json{{"commute", tm.commute_checked},
                     {"concatenate", tm.concatenate_checked},
                     {"index_swap", tm.multiswap_checked},
                     {"clash", tm.clash_checked},
                     {"failures", tm.commute_failed + tm.concatenate_failed + tm.multiswap_failed +
                                      tm.clash_failed}});
    }

    {
        std::mt19937 rng(0x5eedu + static_cast<unsigned>(n));
        const auto& all = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        long failures = 0;
        for (int s = 0; s < assoc_samples; ++s) {
            HeckeElement a = HeckeElement::t_basis(n, f, all[pick(rng)]);
            HeckeElement b = HeckeElement::t_basis(n, f, all[pick(rng)]);
            HeckeElement c = HeckeElement::t_basis(n, f, all[pick(rng)]);
            if (!(mult(mult(a, b), c) == mult(a, mult(b, c)))) ++failures;
        }
        rep.add("associativity-random-triples", "Section 2.3", failures == 0,
                Json{{"samples", assoc_samples}, {"failures", failures}});
    }

    {
        // q = 1 multiplication table against the group algebra
        int m = std::min(n, 4);
        const ScalarField* f1 = ScalarField::rational(1);
        long failures = 0;
        for (const auto& u : all_permutations(m))
            for (const auto& v : all_permutations(m)) {
                HeckeElement lhs =
                    mult(HeckeElement::t_basis(m, f1, u), HeckeElement::t_basis(m, f1, v));
                if (!(lhs == HeckeElement::t_basis(m, f1, u.compose(v)))) ++failures;
            }
        rep.add("q1-group-algebra-table", "Section 1.2", failures == 0,
                Json{{"n_used", m}, {"failures", failures}});
    }

    {
        // both characters kill the quadratic relation; trivial is multiplicative
        bool ok = true;
        Scalar q = Scalar::q_power(f, 1);
        for (int i = 1; i <= n - 1; ++i) {
            HeckeElement ti = HeckeElement::unit(n, f).right_mul_gen(i);
            HeckeElement rel = mult(ti + HeckeElement::unit(n, f),
                                    ti - HeckeElement::unit(n, f).scaled(q));
            if (!rel.is_zero()) ok = false;  // the relation itself collapses to zero
            if (!character(CharacterKind::Trivial, ti).operator==(q)) ok = false;
            if (!(character(CharacterKind::Sign, ti) == -Scalar::one(f))) ok = false;
        }
        std::mt19937 rng(0xabcdu + static_cast<unsigned>(n));
        const auto& all = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int s = 0; s < 200; ++s) {
            HeckeElement a = HeckeElement::t_basis(n, f, all[pick(rng)]);
            HeckeElement b = HeckeElement::t_basis(n, f, all[pick(rng)]);
            for (auto kind : {CharacterKind::Trivial, CharacterKind::Sign}) {
                Scalar lhs = character(kind, mult(a, b));
                Scalar rhs = character(kind, a) * character(kind, b);
                if (!(lhs == rhs)) ok = false;
            }
        }
        rep.add("rank1-characters", "Section 1.3", ok, Json::object());
    }

    {
        // basis element independent of the reduced word used to fold it
        bool ok = true;
        std::mt19937 rng(0xfeedu + static_cast<unsigned>(n));
        const auto& all = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int s = 0; s < 25; ++s) {
            const Permutation& w = all[pick(rng)];
            auto orbit = matsumoto_orbit(w, 100000);
            const auto& first = *orbit.begin();
            const auto& last = *orbit.rbegin();
            HeckeElement via_first = HeckeElement::unit(n, f);
            for (int l : first) via_first = via_first.right_mul_gen(l);
            HeckeElement via_last = HeckeElement::unit(n, f);
            for (int l : last) via_last = via_last.right_mul_gen(l);
            if (!(via_first == via_last)) ok = false;
            if (!(via_first == HeckeElement::t_basis(n, f, w))) ok = false;
        }
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b)
                if (!(HeckeElement::t_ba(n, f, b, a) ==
                      HeckeElement::t_basis(n, f, Permutation::cycle_sba(n, b, a))))
                    ok = false;
        rep.add("standard-basis-well-defined", "Theorem 2.2", ok, Json::object());
    }

    {
        // generator-by-basis products have coordinates 1, q, or q-1 only;
        // general products stay polynomial in q
        bool ok = true;
        Scalar q = Scalar::q_power(f, 1);
        Scalar qm1 = q - Scalar::one(f);
        std::mt19937 rng(0xc0deu + static_cast<unsigned>(n));
        const auto& all = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int s = 0; s < 100; ++s) {
            const Permutation& w = all[pick(rng)];
            for (int i = 1; i <= n - 1; ++i) {
                HeckeElement prod = HeckeElement::t_basis(n, f, w).right_mul_gen(i);
                for (const auto& [u, c] : prod.coords()) {
                    (void)u;
                    if (!(c.is_one() || c == q || c == qm1)) ok = false;
                }
            }
            HeckeElement general =
                mult(HeckeElement::t_basis(n, f, all[pick(rng)]),
                     HeckeElement::t_basis(n, f, all[pick(rng)]));
            if (general.coords().size() > static_cast<std::size_t>(factorial(n))) ok = false;
            if (f->kind == FieldKind::GenericQ) {
                for (const auto& [u, c] : general.coords()) {
                    (void)u;
                    if (!std::get<RatFun>(c.value()).den.is_one()) ok = false;
                }
            }
        }
        rep.add("basis-closure", "Theorem 2.7", ok, Json::object());
    }

    rep.duration_ms = watch.ms();
    return rep;
}

SuiteReport run_injective_words_suite(int n, const ScalarField* f) {
    if (n < 0 || n > 6) throw GuardExceeded("injective-words suite supports 0 <= n <= 6");
    Stopwatch watch;
    SuiteReport rep;
    rep.suite = "injective-words";
    rep.params = Json{{"n", n}, {"field", f->descriptor}};

    FreeChainComplex c = build_C(n, f);
    FreeChainComplex cp = build_Cprime(n, f);

    {
        bool ok = true;
        Json dims = Json::array();
        for (int r = -1; r <= n - 1; ++r) {
            long expect = factorial(n) / factorial(std::max(n - r - 1, 1));
            if (c.dim(r) != expect || cp.dim(r) != expect) ok = false;
            dims.push_back(c.dim(r));
        }
        rep.add("degreewise-dimensions", "Definition 3.1", ok, Json{{"dims", dims}});
    }

    {
        auto betti = c.homology_dims();
        bool ok = true;
        for (const auto& [d, b] : betti)
            if (d <= n - 2 && b != 0) ok = false;
        rep.add("farmer-acyclicity", "Theorem 3.3", ok, Json{{"betti", betti_json(betti)}});
    }

    {
        ChainMap th = theta(n, cp, c);
        bool permutation_blocks = true;
        for (const auto& [r, b] : th.blocks)
            if (b.rows() > 0 && !b.is_permutation_matrix()) permutation_blocks = false;
        bool ok = verify_chain_map(th).pass() && is_iso(th) && permutation_blocks;
        rep.add("theta-isomorphism", "Proposition 4.6", ok,
                Json{{"permutation_blocks", permutation_blocks}});
    }

    {
        DComplex d(n, f);
        bool ok = true;
        for (int r = 0; r <= n - 1; ++r)
            if (!(d.complex().boundary(r) == cp.boundary(r))) ok = false;
        rep.add("translated-complex-matches-deformed", "Section 5", ok, Json::object());
    }

    {
        // the word-side symmetric group action matches the module-side one
        bool ok = true;
        std::mt19937 rng(0x1eafu + static_cast<unsigned>(n));
        const auto& all = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 50 && n >= 1; ++trial) {
            const Permutation& sigma = all[pick(rng)];
            int r = static_cast<int>(trial % (n + 1)) - 1;
            InducedModule mod(n, n - r - 1, f);
            std::uniform_int_distribution<int> pickb(0, mod.dim() - 1);
            const Permutation& x = mod.basis()[pickb(rng)];
            auto [idx, coeff] = mod.reduce_tensor(sigma.compose(x));
            // word side
            std::vector<int> moved;
            for (int i = n - r; i <= n; ++i) moved.push_back(sigma(x(i)));
            std::vector<int> expected;
            const Permutation& rep_x = mod.basis()[idx];
            for (int i = n - r; i <= n; ++i) expected.push_back(rep_x(i));
            if (!(moved == expected && coeff.is_one())) ok = false;
        }
        rep.add("letterwise-equivariance", "Definition 3.1", ok, Json::object());
    }

    rep.duration_ms = watch.ms();
    return rep;
}

SuiteReport run_d_complex_suite(int n, const ScalarField* f, bool guard_override) {
    if (n < 1 || n > 6) throw GuardExceeded("d-complex suite supports 1 <= n <= 6");
    if (!guard_override && f->kind == FieldKind::GenericQ && n > 5)
        throw GuardExceeded("generic-q d-complex suite guarded to n <= 5; override to proceed");
    Stopwatch watch;
    SuiteReport rep;
    rep.suite = "d-complex";
    rep.params = Json{{"n", n}, {"field", f->descriptor}};

    DComplex d(n, f);

    {
        bool ok = d.complex().dim(-1) == 1 && d.complex().dim(n - 1) == factorial(n);
        Json dims = Json::array();
        for (int r = -1; r <= n - 1; ++r) {
            long expect = factorial(n) / factorial(std::max(n - r - 1, 1));
            if (d.complex().dim(r) != expect) ok = false;
            dims.push_back(d.complex().dim(r));
        }
        rep.add("construction-and-monomial-entries", "Lemma 6.4", ok, Json{{"dims", dims}});
    }

    {
        bool ok = true;
        for (int r = 0; r <= n - 1; ++r)
            if (!(d.complex().boundary(r) * d.complex().boundary(r + 1)).is_zero()) ok = false;
        rep.add("boundary-squares-to-zero", "Lemma 6.3", ok, Json::object());
    }

    {
        auto ss = semisimplicial_check(n, f);
        rep.add("semisimplicial-identity", "Lemma 6.3", ss.pass(),
                Json{{"triples", ss.triples_checked},
                     {"failures", ss.failures},
                     {"rescaled_failures", ss.rescaled_failures}});
    }

    {
        auto fc = four_cases_check(n, f);
        rep.add("face-action-four-cases", "Lemma 6.4", fc.pass(),
                Json{{"cases", fc.cases_checked},
                     {"failures", fc.failures},
                     {"refinements", fc.refinement_checked},
                     {"refinement_failures", fc.refinement_failures}});
    }

    auto layers = filtration(d);
    {
        auto fr = verify_filtration(d, layers);
        Json dims = Json::array();
        for (const auto& ld : fr.layer_dims) dims.push_back(ld);
        rep.add("filtration-nesting-closure-exhaustion", "Definition 7.1, Lemma 7.2, Lemma 8.6",
                fr.pass(),
                Json{{"nested", fr.nested},
                     {"closed", fr.closed_under_boundary},
                     {"exhausts", fr.exhausts},
                     {"strict_growth", fr.strict_growth_matches_index_sets},
                     {"layer_dims", dims}});
    }

    {
        FreeChainComplex f0 = layer_subcomplex(d, layers[0]);
        auto betti = f0.homology_dims();
        bool ok = true;
        for (const auto& [deg, b] : betti)
            if (b != 0) ok = false;
        rep.add("bottom-layer-contractible", "Lemma 3.6", ok, Json{{"betti", betti_json(betti)}});
    }

    {
        bool ok = true;
        Json per_p = Json::array();
        for (int p = 1; p <= n - 1; ++p) {
            FreeChainComplex q = layer_quotient(d, layers[p], layers[p - 1], nullptr);
            auto betti = q.homology_dims();
            for (const auto& [deg, b] : betti)
                if (deg <= n - 2 && b != 0) ok = false;
            Json e;
            e["p"] = p;
            e["betti"] = betti_json(betti);
            per_p.push_back(e);
        }
        rep.add("quotient-layers-acyclic-in-range", "Lemma 3.7", ok, Json{{"per_p", per_p}});
    }

    {
        auto pr = phi_check(n, f);
        rep.add("cone-comparison-iso", "Theorem 5.1", pr.pass(),
                Json{{"well_defined", pr.well_defined},
                     {"scaled_bijection", pr.scaled_bijection},
                     {"iso", pr.iso},
                     {"matches_q1_model", pr.matches_q1_model}});
    }

    {
        bool ok = true;
        Json per_p = Json::array();
        for (int p = 1; p <= n - 1; ++p) {
            auto ps = psi_check(n, p, f);
            if (!ps.pass()) ok = false;
            Json e;
            e["p"] = p;
            e["well_defined"] = ps.well_defined;
            e["basis_bijection"] = ps.basis_bijection;
            e["iso"] = ps.iso;
            e["dims_match"] = ps.dims_match_suspension;
            per_p.push_back(e);
        }
        rep.add("quotient-comparison-iso", "Theorem 5.1, Definition 8.4", ok,
                Json{{"per_p", per_p}});
    }

    {
        auto ac = acyclicity_check(n, f);
        rep.add("acyclicity-through-n-minus-2", "Theorem 5.2", ac.pass(),
                Json{{"betti", betti_json(ac.betti)}, {"top_betti", ac.top_betti}});
    }

    rep.duration_ms = watch.ms();
    return rep;
}

SuiteReport run_tor_suite(int n, const ScalarField* f, int d_max, bool guard_override) {
    Stopwatch watch;
    SuiteReport rep;
    rep.suite = "tor";
    rep.params = Json{{"n", n}, {"field", f->descriptor}, {"dmax", d_max}};
    FreeResolution res = build_resolution(n, f, d_max, GeneratorOrder::SmallestSupportFirst,
                                          guard_override);
    TorTable t = tor_table(res);
    rep.add("resolution-exact", "Proposition 2.8", true,
            Json{{"ranks", res.ranks}, {"kernel_dims", res.kernel_dims}});
    rep.add("tor-degree-zero", "Theorem 1.1", t.dims[0] == 1, Json{{"dims", t.dims}});
    rep.duration_ms = watch.ms();
    return rep;
}

SuiteReport run_ext_suite(int n, const ScalarField* f, int d_max, bool guard_override) {
    Stopwatch watch;
    SuiteReport rep;
    rep.suite = "ext";
    rep.params = Json{{"n", n}, {"field", f->descriptor}, {"dmax", d_max}};
    FreeResolution res = build_resolution(n, f, d_max, GeneratorOrder::SmallestSupportFirst,
                                          guard_override);
    ExtTable t = ext_table(res);
    rep.add("resolution-exact", "Proposition 2.8", true,
            Json{{"ranks", res.ranks}, {"kernel_dims", res.kernel_dims}});
    rep.add("ext-degree-zero", "Theorem 1.1", t.dims[0] == 1, Json{{"dims", t.dims}});
    rep.duration_ms = watch.ms();
    return rep;
}

SuiteReport run_stability_suite(int n, const ScalarField* f, int d_max, bool guard_override) {
    Stopwatch watch;
    SuiteReport rep;
    rep.suite = "stability";
    rep.params = Json{{"n", n}, {"field", f->descriptor}, {"dmax", d_max}};
    StabilityReport sr = stability_check(n, f, d_max, guard_override);
    Json degs = Json::array();
    for (const auto& deg : sr.degrees) {
        Json e;
        e["d"] = deg.d;
        e["dim_small"] = deg.dim_small;
        e["dim_big"] = deg.dim_big;
        e["rank"] = deg.rank_tor;
        e["in_range"] = deg.in_range;
        e["tor_iso"] = deg.tor_iso;
        e["ext_iso"] = deg.ext_iso;
        degs.push_back(e);
    }
    rep.add("stabilization-iso-in-range", "Theorem 1.1", sr.pass(), Json{{"degrees", degs}});
    rep.duration_ms = watch.ms();
    return rep;
}

}  // namespace hecke
