#pragma once

#include <map>

#include "hecke/permutation.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// Element of the Iwahori-Hecke algebra H_n in coordinates over the standard
/// basis {T_w}. Zero coordinates are never stored.
class HeckeElement {
public:
    HeckeElement(int n, const ScalarField* f) : n_(n), f_(f) {}

    static HeckeElement unit(int n, const ScalarField* f);
    /// the standard basis element T_w
    static HeckeElement t_basis(int n, const ScalarField* f, const Permutation& w);
    /// T_ba = T_{b-1} T_{b-2} ... T_a (= T_{s_ba}); unit when a = b
    static HeckeElement t_ba(int n, const ScalarField* f, int b, int a);

    int rank() const { return n_; }
    const ScalarField* field() const { return f_; }
    const std::map<Permutation, Scalar>& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(const Permutation& w) const;

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement scaled(const Scalar& s) const;
    void add_scaled(const HeckeElement& o, const Scalar& s);
    void add_term(const Permutation& w, const Scalar& s);
    bool operator==(const HeckeElement& o) const;

    /// T_i * (this), using the two length cases of the defining relations
    HeckeElement left_mul_gen(int i) const;
    /// (this) * T_i
    HeckeElement right_mul_gen(int i) const;
    /// T_w * (this) via a reduced word for w
    HeckeElement left_mul_basis(const Permutation& w) const;
    /// (this) * T_w
    HeckeElement right_mul_basis(const Permutation& w) const;

    /// view in a larger rank (support embedded, coordinates unchanged)
    HeckeElement embed(int N) const;

    std::string str() const;

private:
    int n_;
    const ScalarField* f_;
    std::map<Permutation, Scalar> c_;
};

HeckeElement mult(const HeckeElement& a, const HeckeElement& b);

enum class CharacterKind { Trivial, Sign };

/// T_w -> q^{l(w)} (trivial) or (-1)^{l(w)} (sign), extended linearly
Scalar character(CharacterKind kind, const HeckeElement& h);

struct TmovesReport {
    long commute_checked = 0, commute_failed = 0;
    long concatenate_checked = 0, concatenate_failed = 0;
    long multiswap_checked = 0, multiswap_failed = 0;
    long clash_checked = 0, clash_failed = 0;
    bool pass() const {
        return commute_failed + concatenate_failed + multiswap_failed + clash_failed == 0;
    }
};

/// Exhaustive check of the four product identities of the T_ba family:
/// commuting for disjoint intervals, concatenation, index-lowering swap, and
/// the clash formula with coefficients (q-1) and q.
TmovesReport verify_tmoves(int n, const ScalarField* f);

}  // namespace hecke
