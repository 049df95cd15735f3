#include "hecke/chain_complex.hpp"

namespace hecke {

FreeChainComplex::FreeChainComplex(const ScalarField* f, int lo, std::vector<int> dims,
                                   std::vector<ScalarMatrix> boundaries, bool check_dd)
    : f_(f), lo_(lo), dims_(std::move(dims)) {
    if (boundaries.size() + 1 != dims_.size())
        throw std::invalid_argument("need one boundary per degree above the bottom");
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        int r = lo_ + 1 + static_cast<int>(k);
        const ScalarMatrix& b = boundaries[k];
        if (b.rows() != dim(r - 1) || b.cols() != dim(r))
            throw std::invalid_argument("boundary shape mismatch at degree " + std::to_string(r));
        bnd_.emplace(r, std::move(boundaries[k]));
    }
    if (check_dd) {
        for (int r = lo_ + 2; r <= hi(); ++r) {
            if (!(boundary(r - 1) * boundary(r)).is_zero())
                throw std::invalid_argument("boundaries do not compose to zero at degree " +
                                            std::to_string(r));
        }
    }
}

int FreeChainComplex::dim(int r) const {
    if (r < lo_ || r > hi()) return 0;
    return dims_[r - lo_];
}

const ScalarMatrix& FreeChainComplex::boundary(int r) const {
    auto it = bnd_.find(r);
    if (it != bnd_.end()) return it->second;
    auto [jt, _] = bnd_.emplace(r, ScalarMatrix(f_, dim(r - 1), dim(r)));
    return jt->second;
}

std::vector<std::pair<int, long>> FreeChainComplex::homology_dims() const {
    std::vector<std::pair<int, long>> out;
    std::map<int, long> ranks;
    for (int r = lo_; r <= hi() + 1; ++r) ranks[r] = rank(boundary(r));
    for (int r = lo_; r <= hi(); ++r) {
        long betti = dim(r) - ranks[r] - ranks[r + 1];
        out.push_back({r, betti});
    }
    return out;
}

FreeChainComplex cone(const FreeChainComplex& c) {
    const ScalarField* f = c.field();
    int lo = c.lo();
    int hi = c.hi() + 1;
    std::vector<int> dims;
    for (int r = lo; r <= hi; ++r) dims.push_back(c.dim(r) + c.dim(r - 1));
    std::vector<ScalarMatrix> bnds;
    for (int r = lo + 1; r <= hi; ++r) {
        // d(x,y) = (d x + (-1)^r y, d y)
        ScalarMatrix m(f, c.dim(r - 1) + c.dim(r - 2), c.dim(r) + c.dim(r - 1));
        const ScalarMatrix& dr = c.boundary(r);
        for (int i = 0; i < dr.rows(); ++i)
            for (int j = 0; j < dr.cols(); ++j) m.at(i, j) = dr.at(i, j);
        Scalar sign = (r % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
        for (int i = 0; i < c.dim(r - 1); ++i) m.at(i, c.dim(r) + i) = sign;
        const ScalarMatrix& dr1 = c.boundary(r - 1);
        for (int i = 0; i < dr1.rows(); ++i)
            for (int j = 0; j < dr1.cols(); ++j)
                m.at(c.dim(r - 1) + i, c.dim(r) + j) = dr1.at(i, j);
        bnds.push_back(std::move(m));
    }
    return FreeChainComplex(f, lo, std::move(dims), std::move(bnds));
}

FreeChainComplex suspend(const FreeChainComplex& c, int k) {
    if (k < 1) throw std::invalid_argument("suspension shift must be >= 1");
    std::vector<int> dims;
    std::vector<ScalarMatrix> bnds;
    for (int r = c.lo(); r <= c.hi(); ++r) dims.push_back(c.dim(r));
    for (int r = c.lo() + 1; r <= c.hi(); ++r) bnds.push_back(c.boundary(r));
    return FreeChainComplex(c.field(), c.lo() + k, std::move(dims), std::move(bnds), false);
}

ChainMapReport verify_chain_map(const ChainMap& f) {
    ChainMapReport rep;
    rep.shapes_ok = true;
    int lo = std::min(f.src->lo(), f.dst->lo());
    int hi = std::max(f.src->hi(), f.dst->hi());
    auto block = [&](int r) -> ScalarMatrix {
        auto it = f.blocks.find(r);
        if (it != f.blocks.end()) return it->second;
        return ScalarMatrix(f.src->field(), f.dst->dim(r), f.src->dim(r));
    };
    for (int r = lo; r <= hi; ++r) {
        ScalarMatrix b = block(r);
        if (b.rows() != f.dst->dim(r) || b.cols() != f.src->dim(r)) {
            rep.shapes_ok = false;
            return rep;
        }
    }
    rep.commutes = true;
    for (int r = lo; r <= hi + 1; ++r) {
        // dst boundary after the map vs the map after src boundary
        ScalarMatrix lhs = f.dst->boundary(r) * block(r);
        ScalarMatrix rhs = block(r - 1) * f.src->boundary(r);
        if (!(lhs == rhs)) {
            rep.commutes = false;
            rep.failing_degrees.push_back(r);
        }
    }
    return rep;
}

bool is_iso(const ChainMap& f) {
    if (!verify_chain_map(f).pass()) return false;
    int lo = std::min(f.src->lo(), f.dst->lo());
    int hi = std::max(f.src->hi(), f.dst->hi());
    for (int r = lo; r <= hi; ++r) {
        int ds = f.src->dim(r), dd = f.dst->dim(r);
        if (ds != dd) return false;
        if (ds == 0) continue;
        auto it = f.blocks.find(r);
        if (it == f.blocks.end()) return false;
        if (rank(it->second) != ds) return false;
    }
    return true;
}

}  // namespace hecke
