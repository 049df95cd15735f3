#include "hecke/induced.hpp"

namespace hecke {

InducedModule::InducedModule(int n, int m, const ScalarField* f)
    : n_(n), m_(std::max(m, 1)), f_(f) {
    if (m < 0 || m > n) throw std::invalid_argument("parabolic rank out of range");
    basis_ = coset_reps(ParabolicRank{n, m_}, CosetSide::Left);
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) index_.emplace(basis_[i], i);
}

int InducedModule::index_of(const Permutation& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::invalid_argument("not a basis representative");
    return it->second;
}

std::pair<int, Scalar> InducedModule::reduce_tensor(const Permutation& w) const {
    if (w.rank() != n_) throw RankMismatch("tensor permutation has the wrong rank");
    Factorization fac = parabolic_factorize(ParabolicRank{n_, m_}, w, CosetSide::Left);
    return {index_of(fac.x), Scalar::q_power(f_, fac.v.length())};
}

std::vector<Scalar> InducedModule::reduce_element(const HeckeElement& h) const {
    if (h.rank() != n_ || h.field() != f_) throw RankMismatch("element does not match the module");
    std::vector<Scalar> out(dim(), Scalar::zero(f_));
    for (const auto& [w, c] : h.coords()) {
        auto [idx, coeff] = reduce_tensor(w);
        out[idx] += c * coeff;
    }
    return out;
}

std::vector<Scalar> InducedModule::act(const HeckeElement& h, const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> out(dim(), Scalar::zero(f_));
    for (int j = 0; j < dim(); ++j) {
        if (v[j].is_zero()) continue;
        // h * T_{x_j}, then reduce each resulting term
        HeckeElement prod = mult(h, HeckeElement::t_basis(n_, f_, basis_[j]));
        std::vector<Scalar> coords = reduce_element(prod);
        for (int i = 0; i < dim(); ++i) out[i] += coords[i] * v[j];
    }
    return out;
}

ScalarMatrix InducedModule::action_matrix(int i) const {
    if (i < 1 || i > n_ - 1) throw std::invalid_argument("generator index out of range");
    ScalarMatrix m(f_, dim(), dim());
    HeckeElement ti = HeckeElement::unit(n_, f_).right_mul_gen(i);
    for (int j = 0; j < dim(); ++j) {
        HeckeElement prod = mult(ti, HeckeElement::t_basis(n_, f_, basis_[j]));
        std::vector<Scalar> coords = reduce_element(prod);
        for (int r = 0; r < dim(); ++r) m.at(r, j) = coords[r];
    }
    return m;
}

ScalarMatrix InducedModule::right_mult_matrix(const HeckeElement& h,
                                              const InducedModule& target) const {
    if (target.n() != n_ || target.field() != f_)
        throw RankMismatch("target module does not match");
    ScalarMatrix m(f_, target.dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        HeckeElement prod = mult(HeckeElement::t_basis(n_, f_, basis_[j]), h);
        std::vector<Scalar> coords = target.reduce_element(prod);
        for (int r = 0; r < target.dim(); ++r) m.at(r, j) = coords[r];
    }
    return m;
}

}  // namespace hecke
