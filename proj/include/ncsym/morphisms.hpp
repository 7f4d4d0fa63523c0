#pragma once

#include <string>
#include <vector>

#include "ncsym/classical.hpp"
#include "ncsym/matrix.hpp"
#include "ncsym/ncsym_hopf.hpp"

namespace ncsym {

// chi: NSym -> Sym, h_alpha -> h_{sort(alpha)} (result in the h basis).
SymElem chi_nsym(const NSymElem& x);

// chi: NCSym -> Sym, m_A -> lambda(A)^! m_{lambda(A)} (m basis).
SymElem chi_ncsym(const NCSymElem& x);

// Lifting map: m_lambda -> (lambda!/|lambda|!) sum of m_A over shape-lambda A.
NCSymElem lift(const IntegerPartition& lambda);
NCSymElem lift(const SymElem& m_expansion);

// I(h_alpha) = lift(h_{alpha_1}) lift(h_{alpha_2}) ... in NCSym; on one part,
// I(h_n) = sum_{A of [n]} (lambda(A)!/n!) m_A.
NCSymElem inclusion_I(const Composition& alpha);
NCSymElem inclusion_I(const NSymElem& h_expansion);

// Coefficient of m_{A(beta)} in I(h_alpha): (alpha union beta)!/alpha!.
Rational canonical_coefficient(const Composition& alpha, const Composition& beta);

struct DeterminantReport {
    Integer det;                  // det of [(alpha union beta)!] over alpha,beta of n
    Integer a_product;            // prod over alpha of prod a_{alpha_i}
    bool product_match = false;   // det == a_product
    bool factorization_match = false; // C diag(a_eta) C^T reproduces the matrix
    bool ok() const { return product_match && factorization_match; }
};

// The factorial matrix [(alpha union beta)!] with rows and columns in
// lexicographic composition order, its Bareiss determinant, the a_alpha
// product, and the refinement-matrix factorization check. 1 <= n <= 7.
DeterminantReport magic_determinant(int n);
Matrix<Integer> union_factorial_matrix(int n);

// rho: kill every term whose set partition has crossings.
NCSymElem rho_quotient(const NCSymElem& x);

// iota: m_A -> R_{c(A)} on at-most-two-block partitions.
NSymElem iota(const NCSymElem& x);

// The two-term product rule for at-most-two-block partitions: merge the
// second argument's blocks into the first's two slots both ways. Degenerate
// (deg-0 or one-block) inputs drop the duplicated term.
NCSymElem ncsym2_product(const SetPartition& a, const SetPartition& b);

// zeta(R_alpha) = M_alpha = sum of m_B over the coarsenings B of A(alpha)
// in which no two adjacent blocks of A(alpha) land in a common block.
NCSymElem zeta(const Composition& alpha);
NCSymElem zeta(const NSymElem& r_expansion);

struct DiagramCheck {
    std::string name;
    bool pass = false;
};

// chi o I = chi on h_alpha; chi o lift = id on m_lambda; Delta o lift =
// (lift (x) lift) o Delta on m_lambda; all through total degree d.
std::vector<DiagramCheck> diagram_checks(int d);
bool diagram_check(int d);

} // namespace ncsym
