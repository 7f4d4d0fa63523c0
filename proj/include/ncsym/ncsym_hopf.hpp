#pragma once

#include <utility>

#include "ncsym/lincomb.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// Elements of NCSym expanded in the monomial basis m_A over set partitions;
// the degree of m_A is |A| and the unit is m of the empty partition.
using NCSymElem = LinComb<SetPartition>;
using NCSymTensor = LinComb<std::pair<SetPartition, SetPartition>>;

// m_A m_B = sum of m_C over the set partitions C of [|A|+|B|] whose meet
// with {1..|A|} | {|A|+1..|A|+|B|} is exactly A|B. Those C are found by
// merging pairs of blocks across the cut: each C corresponds to a partial
// matching between blocks of A and blocks of B, so every structure constant
// is 0 or 1.
NCSymElem ncsym_product(const SetPartition& a, const SetPartition& b);
NCSymElem ncsym_product(const NCSymElem& x, const NCSymElem& y);

// Delta(m_A) = sum over block subsets S of m_{A_S} (x) m_{A_{S^c}};
// coefficients accumulate when distinct subsets restrict to equal pairs.
NCSymTensor ncsym_coproduct(const SetPartition& a);
NCSymTensor ncsym_coproduct(const NCSymElem& x);

Rational ncsym_counit(const NCSymElem& x);

// Antipode via the graded recursion, memoized per basis element.
NCSymElem ncsym_antipode(const NCSymElem& x);

// Product on NCSym (x) NCSym acting componentwise; the twist carries no
// signs since the grading is not super.
NCSymTensor ncsym_tensor_product(const NCSymTensor& x, const NCSymTensor& y);

} // namespace ncsym
