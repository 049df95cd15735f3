#pragma once

#include <map>

#include "hecke/matrix.hpp"

namespace hecke {

/// Finite chain complex of free modules over a scalar field; degrees run
/// lo..hi with lo allowed to be -1 (augmented complexes need no reindexing).
/// boundary(r) maps degree r to degree r-1 for lo < r <= hi.
class FreeChainComplex {
public:
    FreeChainComplex(const ScalarField* f, int lo, std::vector<int> dims,
                     std::vector<ScalarMatrix> boundaries, bool check_dd = true);

    const ScalarField* field() const { return f_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int dim(int r) const;
    /// zero-shaped matrix outside (lo, hi]
    const ScalarMatrix& boundary(int r) const;

    /// dim ker boundary(r) - rank boundary(r+1), for every degree lo..hi
    std::vector<std::pair<int, long>> homology_dims() const;

private:
    const ScalarField* f_;
    int lo_;
    std::vector<int> dims_;
    mutable std::map<int, ScalarMatrix> bnd_;  // keyed by source degree
};

FreeChainComplex cone(const FreeChainComplex& c);
FreeChainComplex suspend(const FreeChainComplex& c, int k);

struct ChainMap {
    const FreeChainComplex* src;
    const FreeChainComplex* dst;
    std::map<int, ScalarMatrix> blocks;  // degree -> dim_dst(r) x dim_src(r)
};

struct ChainMapReport {
    bool shapes_ok = false;
    bool commutes = false;
    std::vector<int> failing_degrees;
    bool pass() const { return shapes_ok && commutes; }
};

ChainMapReport verify_chain_map(const ChainMap& f);
bool is_iso(const ChainMap& f);

}  // namespace hecke
