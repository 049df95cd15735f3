#pragma once

#include "hecke/chain_complex.hpp"
#include "hecke/induced.hpp"

namespace hecke {

/// The deformed complex of injective words: degree r carries
/// H_n (x)_{H_{n-r-1}} t for -1 <= r <= n-1, with boundary
/// sum_j (-1)^j q^{-j} [right multiplication by T_{n-r+j,n-r}].
/// Boundary entries are always 0 or +-q^k, which is asserted at build time.
class DComplex {
public:
    DComplex(int n, const ScalarField* f);

    int n() const { return n_; }
    const ScalarField* field() const { return f_; }
    const FreeChainComplex& complex() const { return *cx_; }
    const InducedModule& module_at(int r) const;

    /// matrix of the single face x (x) 1 -> x * T_{n-r+j,n-r} (x) 1
    ScalarMatrix face_matrix(int r, int j) const;

private:
    int n_;
    const ScalarField* f_;
    std::vector<InducedModule> mods_;  // index r + 1
    std::unique_ptr<FreeChainComplex> cx_;
};

DComplex build_D(int n, const ScalarField* f);

struct SemisimplicialReport {
    long triples_checked = 0;
    long failures = 0;
    long rescaled_failures = 0;  // strict identity for the maps q^{-j} d_j
    bool pass() const { return failures == 0 && rescaled_failures == 0; }
};

/// d_i d_j = q * d_{j-1} d_i for i < j, and the strict semisimplicial
/// identity after rescaling the faces by q^{-j}
SemisimplicialReport semisimplicial_check(int n, const ScalarField* f);

struct FourCasesReport {
    long cases_checked = 0;
    long failures = 0;
    long refinement_checked = 0;
    long refinement_failures = 0;
    bool pass() const { return failures == 0 && refinement_failures == 0; }
};

/// evaluates every face on the elements T_{n,n-t} (x) 1 by generic Hecke
/// arithmetic and compares with the closed-form case split
FourCasesReport four_cases_check(int n, const ScalarField* f);

/// Filtration layer: per degree, the positions of the distinguished basis
/// vectors T_x T_{n,n-t} (x) 1 spanning F_p inside the canonical basis of
/// D(n); the layer bases are nested subsets of the canonical basis.
struct FiltrationLayer {
    int p;
    std::vector<std::vector<int>> indices;  // per degree r = -1..n-1, sorted
};

std::vector<FiltrationLayer> filtration(const DComplex& d);

struct FiltrationReport {
    bool nested = false;
    bool closed_under_boundary = false;
    bool exhausts = false;
    bool strict_growth_matches_index_sets = false;
    std::vector<std::vector<int>> layer_dims;  // [p][r - lo]
    bool pass() const {
        return nested && closed_under_boundary && exhausts && strict_growth_matches_index_sets;
    }
};

FiltrationReport verify_filtration(const DComplex& d, const std::vector<FiltrationLayer>& layers);

/// the subcomplex spanned by the layer's basis positions
FreeChainComplex layer_subcomplex(const DComplex& d, const FiltrationLayer& layer);

/// quotient of consecutive layers in the coordinates of the extended basis
FreeChainComplex layer_quotient(const DComplex& d, const FiltrationLayer& upper,
                                const FiltrationLayer& lower,
                                std::vector<std::vector<int>>* quotient_positions = nullptr);

struct PhiReport {
    bool well_defined = false;       // chain map commutation
    bool scaled_bijection = false;   // one nonzero per row and column
    bool iso = false;                // square blocks of full rank
    bool matches_q1_model = false;   // only checked at q = 1, else true
    bool pass() const { return well_defined && scaled_bijection && iso && matches_q1_model; }
};

/// the cone-to-F_0 comparison Phi_r(x (x) 1, 0) = q^{-r} x T_{n,n-r-1} (x) 1,
/// Phi_r(0, y (x) 1) = q y (x) 1
PhiReport phi_check(int n, const ScalarField* f);

struct PsiReport {
    int p;
    bool well_defined = false;
    bool basis_bijection = false;
    bool iso = false;
    bool dims_match_suspension = false;
    bool pass() const { return well_defined && basis_bijection && iso && dims_match_suspension; }
};

/// the suspended induced complex against the quotient F_p/F_{p-1};
/// generator goes to the class of T_{n,n-p} (x) 1
PsiReport psi_check(int n, int p, const ScalarField* f);

struct AcyclicityReport {
    std::vector<std::pair<int, long>> betti;
    long top_betti = 0;
    bool vanishing_through_n_minus_2 = false;
    bool pass() const { return vanishing_through_n_minus_2; }
};

AcyclicityReport acyclicity_check(int n, const ScalarField* f);

/// the shifted induced complex H_{n-1} (x)_{H_{n-p-1}} Sigma^{p+1} D(n-p-1),
/// exposed for the Psi comparison and its tests
FreeChainComplex build_induced_shifted(int n, int p, const ScalarField* f);

}  // namespace hecke
