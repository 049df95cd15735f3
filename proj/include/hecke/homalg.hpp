#pragma once

#include "hecke/chain_complex.hpp"
#include "hecke/hecke_algebra.hpp"

namespace hecke {

using HeckeVector = std::vector<HeckeElement>;
/// entry [j][i] is the j-th component of the image of the i-th generator
using HeckeMatrix = std::vector<HeckeVector>;

enum class GeneratorOrder { SmallestSupportFirst, LargestSupportFirst };

/// Free resolution of the trivial module t over H_n, built degree by degree:
/// the kernel of each map is computed as a vector subspace and a generating
/// set is extracted greedily. Maps are stored with Hecke-element entries;
/// maps[d-1] presents P_d -> P_{d-1} and the augmentation H_n -> t is the
/// trivial character. Exactness and zero composites are verified at build
/// time through degree d_max + 1.
struct FreeResolution {
    int n;
    const ScalarField* f;
    int d_max;
    std::vector<int> ranks;            // per degree 0..d_max+1
    std::vector<HeckeMatrix> maps;     // maps[d-1]: P_d -> P_{d-1}
    std::vector<ScalarMatrix> vect;    // vect[d]: underlying vector-space map of maps[d-1];
                                       // vect[0] is the augmentation row
    std::vector<long> kernel_dims;     // dim ker vect[d] for d = 0..d_max+1
};

FreeResolution build_resolution(int n, const ScalarField* f, int d_max,
                                GeneratorOrder order = GeneratorOrder::SmallestSupportFirst,
                                bool guard_override = false);

struct TorTable {
    std::vector<long> dims;  // degrees 0..d_max
};
struct ExtTable {
    std::vector<long> dims;
};

/// trivial-character collapse of the resolution maps, then homology
TorTable tor_table(const FreeResolution& res);
/// contravariant hom-into-t: transposed collapsed maps, then cohomology
ExtTable ext_table(const FreeResolution& res);

/// the collapsed scalar boundary matrices; index d = 1..d_max+1
std::vector<ScalarMatrix> collapsed_complex(const FreeResolution& res);

/// Induced map on homology at a fixed degree. Homology of the source is
/// ker(down_src)/im(up_src), of the target ker(down_dst)/im(up_dst); block
/// carries chains from source to target.
ScalarMatrix induced_on_homology(const ScalarMatrix& down_src, const ScalarMatrix& up_src,
                                 const ScalarMatrix& down_dst, const ScalarMatrix& up_dst,
                                 const ScalarMatrix& block);

struct StabilizationResult {
    int n;
    const ScalarField* f;
    int d_max;
    std::vector<ScalarMatrix> tor_maps;  // Tor_d over H_{n-1} -> Tor_d over H_n
    std::vector<ScalarMatrix> ext_maps;  // Ext^d over H_n -> Ext^d over H_{n-1}
    std::vector<long> tor_dims_small, tor_dims_big;
    std::vector<long> ext_dims_small, ext_dims_big;
};

/// Restricts the H_n resolution, lifts the identity of t to a chain map from
/// the H_{n-1} resolution, and collapses both sides. lift_pivot selects the
/// pivot strategy of the comparison-theorem solves, so two distinct lifts can
/// be compared.
StabilizationResult stabilization_map(int n, const ScalarField* f, int d_max,
                                      Pivoting lift_pivot = Pivoting::ByColumn,
                                      GeneratorOrder order = GeneratorOrder::SmallestSupportFirst,
                                      bool guard_override = false);

struct StabilityDegree {
    int d;
    long dim_small, dim_big;
    long rank_tor, rank_ext;
    bool in_range;  // d <= (n-1)/2
    bool tor_iso, ext_iso;
};

struct StabilityReport {
    int n;
    int d_max;
    std::vector<StabilityDegree> degrees;
    bool pass() const {
        for (const auto& d : degrees)
            if (d.in_range && !(d.tor_iso && d.ext_iso)) return false;
        return true;
    }
};

StabilityReport stability_check(int n, const ScalarField* f, int d_max,
                                bool guard_override = false);

}  // namespace hecke
