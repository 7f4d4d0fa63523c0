#pragma once

#include <compare>
#include <vector>

#include "ncsym/composition.hpp"

namespace ncsym {

// Set partition of [n] = {1,..,n}. Blocks are stored sorted internally and
// ordered by their minimum element; that implied order is load-bearing for
// block restriction, the splitting product, and ribbon compositions.
// The empty partition (n = 0, no blocks) is valid.
//
// Values are ordered by (n, restricted-growth string), which is also the
// enumeration order and makes the lex-least word of each type the sort key.
class SetPartition {
public:
    SetPartition() = default;

    // Blocks must be disjoint, nonempty, and cover exactly {1,..,n}.
    static SetPartition from_blocks(std::vector<std::vector<int>> blocks);

    // Restricted-growth string r (1-based labels, r[0] = 1, each entry at
    // most 1 + max of the prefix); r[i] is the block label of element i+1.
    static SetPartition from_rgs(const std::vector<int>& rgs);

    // Relabel pairwise-disjoint nonempty sets order-isomorphically to 1..m.
    static SetPartition standardize(std::vector<std::vector<int>> sets);

    int size() const { return n_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // Block label (1-based, min order) of each element; length n.
    std::vector<int> rgs() const;

    // Block sizes, weakly decreasing.
    IntegerPartition shape() const;

    bool operator==(const SetPartition&) const = default;
    std::strong_ordering operator<=>(const SetPartition& o) const;

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

// Lattice operations in refinement order. All require |a| = |b|.
SetPartition meet(const SetPartition& a, const SetPartition& b);
SetPartition join(const SetPartition& a, const SetPartition& b);
bool refines(const SetPartition& a, const SetPartition& b);

// A|B: blocks of a, then blocks of b shifted up by |a|.
SetPartition shift_concat(const SetPartition& a, const SetPartition& b);

// A_S: standardization of the blocks selected by 1-based indices in the
// min-ordered listing. S empty gives the empty partition.
SetPartition restrict_blocks(const SetPartition& a, const std::vector<int>& indices);

// A(alpha): consecutive intervals of lengths alpha_1, alpha_2, ...
SetPartition canonical_from_composition(const Composition& alpha);

// True iff no composition alpha has A(alpha) = A, i.e. some block is not an
// interval of consecutive integers.
bool has_crossings(const SetPartition& a);

// A o B: block i of the result is A_i united with B_i shifted by |A|, with
// the unmatched tail of the longer argument carried over. l(AoB) = max.
SetPartition compose(const SetPartition& a, const SetPartition& b);

// Unique factorization into nonsplitable partitions under compose, by the
// minimal-cut criterion: the smallest k < n such that the values
// min(B_i minus [k]) are nondecreasing in i (empty min = +infinity) splits
// off blocks-intersect-[k]; recurse on the standardized remainder.
// Requires a nonempty partition; returns a singleton iff a is nonsplitable.
std::vector<SetPartition> split_decompose(const SetPartition& a);

bool is_nonsplitable(const SetPartition& a);

// c(A) for partitions with at most two blocks: lengths of the maximal runs
// of consecutive integers lying in a common block. Requires 1 <= l(A) <= 2.
Composition ribbon_composition(const SetPartition& a);

// All set partitions of [m] (at most max_blocks blocks when bound >= 0),
// by restricted-growth strings in lexicographic order.
std::vector<SetPartition> enumerate_set_partitions(int m, int max_blocks = -1);

// w_{m,n}: nonsplitable set partitions of [m] with at most n blocks.
Integer count_nonsplitable(int m, int n);

Integer bell_number(int m);

} // namespace ncsym
