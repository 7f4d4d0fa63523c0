#pragma once

#include <utility>

#include "ncsym/composition.hpp"
#include "ncsym/lincomb.hpp"

namespace ncsym {

// Sym elements are expansions in a single named basis (monomial m or
// complete h) over integer partitions; conversions are explicit. NSym
// elements likewise over compositions (complete h or ribbon R).
using SymElem = LinComb<IntegerPartition>;
using SymTensor = LinComb<std::pair<IntegerPartition, IntegerPartition>>;
using NSymElem = LinComb<Composition>;
using NSymTensor = LinComb<std::pair<Composition, Composition>>;

// m_lambda m_mu = sum_nu r^nu m_nu where r^nu counts pairs of length-l(nu)
// vectors rearranging lambda and mu (zeros allowed) that add to nu.
SymElem sym_m_product(const IntegerPartition& lambda, const IntegerPartition& mu);
SymElem sym_m_product(const SymElem& x, const SymElem& y);

// Delta(m_lambda): sum over multiset splittings of the parts.
SymTensor sym_m_coproduct(const IntegerPartition& lambda);
SymTensor sym_m_coproduct(const SymElem& x);

// h_lambda in the m basis: h_n = sum_{lambda of n} m_lambda, extended
// multiplicatively.
SymElem sym_h_to_m(const IntegerPartition& lambda);
SymElem sym_h_to_m(const SymElem& h_expansion);

SymElem sym_m_antipode(const SymElem& x);

// NSym product on the h basis is concatenation.
NSymElem nsym_h_product(const Composition& a, const Composition& b);
NSymElem nsym_h_product(const NSymElem& x, const NSymElem& y);

// Delta(h_n) = sum h_k (x) h_{n-k}, extended as an algebra map over parts.
NSymTensor nsym_h_coproduct(const Composition& a);
NSymTensor nsym_h_coproduct(const NSymElem& x);

Rational nsym_counit(const NSymElem& x);

NSymElem nsym_h_antipode(const NSymElem& x);

// R_alpha = sum over beta coarser than alpha (D(beta) subset of D(alpha))
// of (-1)^(l(alpha)-l(beta)) h_beta.
NSymElem ribbon_to_h(const Composition& alpha);
NSymElem ribbon_to_h(const NSymElem& r_expansion);

// Inverse change of basis: h_alpha = sum over coarser beta of R_beta.
NSymElem h_to_ribbon(const Composition& alpha);
NSymElem h_to_ribbon(const NSymElem& h_expansion);

// R_alpha R_beta = R_{alpha |> beta} + R_{alpha . beta}: the last part of
// alpha absorbs the first part of beta, or plain concatenation. Both
// arguments must be nonempty.
NSymElem ribbon_product(const Composition& a, const Composition& b);
NSymElem ribbon_product(const NSymElem& x, const NSymElem& y);

} // namespace ncsym
