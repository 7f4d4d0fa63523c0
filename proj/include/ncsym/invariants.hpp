#pragma once

#include <vector>

#include "ncsym/ncsym_hopf.hpp"
#include "ncsym/set_partition.hpp"
#include "ncsym/words.hpp"

namespace ncsym {

// Expansion of the free-generator basis element W_B in n variables: the
// product of m over the nonsplitable factors of B, truncated to terms with at
// most n blocks (partitions with more blocks vanish in n variables). The
// result is unitriangular: coefficient 1 on m_B, zero on anything whose
// leading word is lex-smaller. Requires l(B) <= n.
NCSymElem wolf_basis_expand(const SetPartition& b, int n);

// Leading words of m_A[X_n] over all nonsplitable A with l(A) <= n and
// |A| <= max_degree, sorted by length then lex. No element is a proper suffix
// of another; this is validated before returning.
std::vector<Word> suffix_set(int n, int max_degree);

// Degree-k words over x_1..x_n with no suffix in suffix_set(n, k), in lex
// order. These index a basis of the coinvariant quotient, so the count equals
// hilbert_C(n, k)[k].
std::vector<Word> coinvariant_basis(int n, int k);

// Dimension of the degree-d harmonics cut out by the power sums in the
// Hausdorff derivative: joint kernel of p_k(del) for 1 <= k <= min(n, d) on
// the n^d-dimensional word space. Bounds: 1 <= n <= 3, 0 <= d <= 6.
int mhar_dimension(int n, int d);

// Dimension of the degree-d harmonics for the twisted derivative: joint
// kernel of m_A(d) over nonempty A with |A| <= d, l(A) <= n. Equals the
// degree-d coinvariant dimension. Bounds: 1 <= n <= 3, 0 <= d <= 5.
int nchar_dimension(int n, int d);

} // namespace ncsym
