#pragma once

#include <compare>
#include <set>
#include <vector>

#include "ncsym/rational.hpp"

namespace ncsym {

// Composition of n: ordered list of positive parts. The empty composition is
// the unique composition of 0. Ordered lexicographically on the part lists,
// which restricted to fixed n gives (1,1,1) < (1,2) < (2,1) < (3).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                     // |alpha|, sum of parts
    int length() const { return static_cast<int>(parts_.size()); }

    // D(alpha): proper partial sums, excluding |alpha|.
    std::set<int> descent_set() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

// Weakly decreasing positive parts; normalizing constructor sorts.
class IntegerPartition {
public:
    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }

    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Composition of n with the given descent set (subset of {1,..,n-1}).
Composition composition_from_descents(int n, const std::set<int>& descents);

// alpha union beta: the composition with descent set D(alpha) | D(beta).
// Requires |alpha| = |beta|.
Composition union_composition(const Composition& a, const Composition& b);

// beta <= alpha in refinement order (beta finer) iff D(alpha) subset D(beta).
bool composition_refines(const Composition& fine, const Composition& coarse);

// All compositions of n in lexicographic order; n = 0 gives { () }.
std::vector<Composition> compositions(int n);

// All integer partitions of n, lexicographically ordered part lists.
std::vector<IntegerPartition> integer_partitions(int n);

IntegerPartition sorted_partition(const Composition& a);

// alpha! = prod alpha_i! (also defined for partitions).
Integer parts_factorial(const Composition& a);
Integer parts_factorial(const IntegerPartition& p);

// lambda^! = prod_i n_i(lambda)! over part multiplicities.
Integer multiplicity_factorial(const IntegerPartition& p);

// a_n: permutations of n with no global descents, via
// a_1 = 1, a_n = n! - sum_{i<n} a_i (n-i)!.  Requires n >= 1.
Integer no_global_descent_count(int n);

} // namespace ncsym
