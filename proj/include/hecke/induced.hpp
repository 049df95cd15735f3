#pragma once

#include <map>

#include "hecke/cosets.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

/// The induced module H_n (x)_{H_m} t, free on the left-distinguished coset
/// representatives  {T_x (x) 1 | x in X_{S_m}^{-1}}  in canonical order.
/// m = 0 and m = 1 both give the regular module and are normalized to 1.
class InducedModule {
public:
    InducedModule(int n, int m, const ScalarField* f);

    int n() const { return n_; }
    int m() const { return m_; }
    const ScalarField* field() const { return f_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Permutation>& basis() const { return basis_; }
    int index_of(const Permutation& x) const;

    /// T_w (x) 1 = coeff * (T_x (x) 1): factorizes w = x v and returns the
    /// basis position of x together with q^{l(v)}
    std::pair<int, Scalar> reduce_tensor(const Permutation& w) const;

    /// coordinates of h (x) 1
    std::vector<Scalar> reduce_element(const HeckeElement& h) const;

    /// left action of h on a coordinate vector
    std::vector<Scalar> act(const HeckeElement& h, const std::vector<Scalar>& v) const;

    /// matrix of act(T_i, -), columns are images of basis vectors
    ScalarMatrix action_matrix(int i) const;

    /// matrix of x (x) 1 -> (x * h) (x) 1 into a lower module (same n, field);
    /// used for the face maps of the deformed complexes
    ScalarMatrix right_mult_matrix(const HeckeElement& h, const InducedModule& target) const;

private:
    int n_, m_;
    const ScalarField* f_;
    std::vector<Permutation> basis_;
    std::map<Permutation, int> index_;
};

}  // namespace hecke
