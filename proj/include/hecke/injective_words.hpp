#pragma once

#include "hecke/chain_complex.hpp"
#include "hecke/induced.hpp"

namespace hecke {

/// injective words on {1..n} of the given length, lexicographic order
std::vector<std::vector<int>> injective_words(int n, int length);

/// The classical complex of injective words: degree r carries the words of
/// length r+1, boundary is the alternating letter deletion. Requires q = 1.
FreeChainComplex build_C(int n, const ScalarField* f);

/// The translated complex on the modules M(n, n-r-1): boundary faces send
/// x (x) 1 to x*s_{n-r+j,n-r} (x) 1, evaluated by plain permutation
/// composition and coset factorization (no Hecke arithmetic). Requires q = 1.
FreeChainComplex build_Cprime(int n, const ScalarField* f);

/// the degreewise bijection x (x) 1 -> (x(n-r),...,x(n)) from C'(n) to C(n)
ChainMap theta(int n, const FreeChainComplex& cprime, const FreeChainComplex& c);

}  // namespace hecke
