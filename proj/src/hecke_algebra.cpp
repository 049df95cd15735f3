#include "hecke/hecke_algebra.hpp"

#include <sstream>

namespace hecke {

HeckeElement HeckeElement::unit(int n, const ScalarField* f) {
    HeckeElement h(n, f);
    h.c_.emplace(Permutation(n), Scalar::one(f));
    return h;
}

HeckeElement HeckeElement::t_basis(int n, const ScalarField* f, const Permutation& w) {
    if (w.rank() != n) throw RankMismatch("basis permutation has the wrong rank");
    HeckeElement h(n, f);
    h.c_.emplace(w, Scalar::one(f));
    return h;
}

HeckeElement HeckeElement::t_ba(int n, const ScalarField* f, int b, int a) {
    if (!(1 <= a && a <= b && b <= n)) throw std::invalid_argument("need 1 <= a <= b <= n");
    // the word (b-1, ..., a) is reduced, so this is the basis element of s_ba
    return t_basis(n, f, Permutation::cycle_sba(n, b, a));
}

Scalar HeckeElement::coeff(const Permutation& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Scalar::zero(f_) : it->second;
}

void HeckeElement::add_term(const Permutation& w, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = c_.emplace(w, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) c_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    HeckeElement r = *this;
    r.add_scaled(o, Scalar::one(f_));
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    HeckeElement r = *this;
    r.add_scaled(o, -Scalar::one(f_));
    return r;
}

HeckeElement HeckeElement::scaled(const Scalar& s) const {
    HeckeElement r(n_, f_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : c_) r.add_term(w, c * s);
    return r;
}

void HeckeElement::add_scaled(const HeckeElement& o, const Scalar& s) {
    if (n_ != o.n_ || f_ != o.f_) throw RankMismatch("rank/field mismatch in Hecke sum");
    if (s.is_zero()) return;
    for (const auto& [w, c] : o.c_) add_term(w, c * s);
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    return n_ == o.n_ && f_ == o.f_ && c_ == o.c_;
}

HeckeElement HeckeElement::left_mul_gen(int i) const {
    HeckeElement r(n_, f_);
    Scalar q = Scalar::q_power(f_, 1);
    Scalar qm1 = q - Scalar::one(f_);
    for (const auto& [w, c] : c_) {
        Permutation sw = w.left_mul_s(i);
        if (sw.length() > w.length()) {
            r.add_term(sw, c);
        } else {
            r.add_term(w, c * qm1);
            r.add_term(sw, c * q);
        }
    }
    return r;
}

HeckeElement HeckeElement::right_mul_gen(int i) const {
    HeckeElement r(n_, f_);
    Scalar q = Scalar::q_power(f_, 1);
    Scalar qm1 = q - Scalar::one(f_);
    for (const auto& [w, c] : c_) {
        Permutation ws = w.right_mul_s(i);
        if (ws.length() > w.length()) {
            r.add_term(ws, c);
        } else {
            r.add_term(w, c * qm1);
            r.add_term(ws, c * q);
        }
    }
    return r;
}

HeckeElement HeckeElement::left_mul_basis(const Permutation& w) const {
    std::vector<int> word = w.lex_min_reduced_word();
    HeckeElement acc = *this;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc.left_mul_gen(*it);
    return acc;
}

HeckeElement HeckeElement::right_mul_basis(const Permutation& w) const {
    std::vector<int> word = w.lex_min_reduced_word();
    HeckeElement acc = *this;
    for (int l : word) acc = acc.right_mul_gen(l);
    return acc;
}

HeckeElement HeckeElement::embed(int N) const {
    HeckeElement r(N, f_);
    for (const auto& [w, c] : c_) r.add_term(w.embed(N), c);
    return r;
}

std::string HeckeElement::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*T" << w.str();
    }
    return os.str();
}

HeckeElement mult(const HeckeElement& a, const HeckeElement& b) {
    if (a.rank() != b.rank() || a.field() != b.field())
        throw RankMismatch("rank/field mismatch in Hecke product");
    // expand the left factor into generator chains and fold them onto b
    HeckeElement out(a.rank(), a.field());
    for (const auto& [w, c] : a.coords()) out.add_scaled(b.left_mul_basis(w), c);
    return out;
}

Scalar character(CharacterKind kind, const HeckeElement& h) {
    const ScalarField* f = h.field();
    Scalar acc = Scalar::zero(f);
    for (const auto& [w, c] : h.coords()) {
        int l = w.length();
        Scalar chi = kind == CharacterKind::Trivial
                         ? Scalar::q_power(f, l)
                         : (l % 2 == 0 ? Scalar::one(f) : -Scalar::one(f));
        acc += c * chi;
    }
    return acc;
}

TmovesReport verify_tmoves(int n, const ScalarField* f) {
    TmovesReport rep;
    auto T = [&](int b, int a) { return HeckeElement::t_ba(n, f, b, a); };
    Scalar q = Scalar::q_power(f, 1);
    Scalar qm1 = q - Scalar::one(f);

    // (1) disjoint index intervals commute
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = c; d <= n; ++d) {
                    if (!(b < c || d < a)) continue;
                    ++rep.commute_checked;
                    if (!(mult(T(d, c), T(b, a)) == mult(T(b, a), T(d, c)))) ++rep.commute_failed;
                }

    // (2) concatenation T_ca = T_cb T_ba for a <= b <= c
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = b; c <= n; ++c) {
                ++rep.concatenate_checked;
                if (!(T(c, a) == mult(T(c, b), T(b, a)))) ++rep.concatenate_failed;
            }

    // (3) T_ba T_dc = T_{d-1,c-1} T_ba for [c,d] and [c-1,d-1] inside [a,b]
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = a + 1; c <= b; ++c)
                for (int d = c; d <= b; ++d) {
                    ++rep.multiswap_checked;
                    if (!(mult(T(b, a), T(d, c)) == mult(T(d - 1, c - 1), T(b, a))))
                        ++rep.multiswap_failed;
                }

    // (4) clash: T_db T_ca = (q-1) T_{c-1,b} T_da + q T_{c-1,a} T_{d,b+1}
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c; d <= n; ++d) {
                    ++rep.clash_checked;
                    HeckeElement lhs = mult(T(d, b), T(c, a));
                    HeckeElement rhs = mult(T(c - 1, b), T(d, a)).scaled(qm1) +
                                       mult(T(c - 1, a), T(d, b + 1)).scaled(q);
                    if (!(lhs == rhs)) ++rep.clash_failed;
                }
    return rep;
}

}  // namespace hecke
