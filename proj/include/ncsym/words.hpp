#pragma once

#include <utility>
#include <vector>

#include "ncsym/lincomb.hpp"
#include "ncsym/ncsym_hopf.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// A word in noncommuting variables: the sequence of 1-based letter indices.
// Words compare lexicographically, so LinComb<Word> iterates smallest first.
using Word = std::vector<int>;
using WordPoly = LinComb<Word>;

// A word over a doubled alphabet X_n union Y_n in which every X letter
// commutes with every Y letter; the pair of projections is a complete
// normal form.
using BiWord = std::pair<Word, Word>;
using BiWordPoly = LinComb<BiWord>;

// Type of a word: positions grouped by equal letters, blocks by first
// occurrence.
SetPartition word_type(const Word& w);

// m_A[X_n]: sum over all words of type exactly A with letters in 1..n; zero
// when l(A) > n. The term count is n(n-1)...(n-l(A)+1).
WordPoly expand_m(const SetPartition& a, int n);

// Letterwise relabeling by a permutation sigma of {1,..,n} given one-line.
WordPoly sigma_act(const std::vector<int>& sigma, const WordPoly& p);

// Lexicographically smallest word with nonzero coefficient (note "leading"
// here means smallest). P must be nonzero.
Word leading_term(const WordPoly& p);

// For l(A) <= n the smallest word of type A is its restricted-growth string.
Word leading_word_of_type(const SetPartition& a);

WordPoly shuffle(const Word& u, const Word& v);
WordPoly shuffle(const WordPoly& p, const WordPoly& q);

// Sum over deletions of one occurrence of the letter.
WordPoly hausdorff_derivative(int letter, const WordPoly& p);

// Strip a leading occurrence of the letter; kill everything else.
WordPoly twisted_derivative(int letter, const WordPoly& p);

enum class DerivativeMode { hausdorff, twisted };

// f acting as a differential operator: each word of f composes its letter
// operators with the rightmost letter applied first, so a word w detects
// reverse(w) as a prefix in twisted mode. This is the order matching the
// pairing <P,Q> = P(d) tau(Q) evaluated at the constant term, tau reversing
// words; Hausdorff operators commute so the order is immaterial there.
WordPoly apply_operator(const WordPoly& f, DerivativeMode mode, const WordPoly& p);

// Scalar product making the words an orthonormal basis.
Rational scalar_product(const WordPoly& p, const WordPoly& q);

// Sum over permutations pi of sgn(pi) x_n^{pi_1 - 1} ... x_1^{pi_n - 1}.
WordPoly vandermonde(int n);

// p_k[X_n] = sum_i x_i^k.
WordPoly power_sum(int k, int n);

// F[X_n, Y_n] as a biword polynomial: equals the image of Delta(F) under
// expanding each side in its own alphabet.
BiWordPoly biword_expand(const NCSymElem& f, int n);
BiWordPoly biword_product(const BiWordPoly& p, const BiWordPoly& q);

} // namespace ncsym
