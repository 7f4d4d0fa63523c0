#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "ncsym/composition.hpp"
#include "ncsym/rational.hpp"

using namespace ncsym;

namespace {

// Independent count of permutations of [n] without a global descent: a global
// descent at k means every value among the first k exceeds every later value.
Integer brute_no_global_descent(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    Integer count = 0;
    do {
        bool has_global = false;
        for (int k = 1; k < n && !has_global; ++k) {
            const int min_front = *std::min_element(perm.begin(), perm.begin() + k);
            const int max_back = *std::max_element(perm.begin() + k, perm.end());
            if (min_front > max_back) has_global = true;
        }
        if (!has_global) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Integer a_product(const Composition& alpha) {
    Integer r = 1;
    for (int p : alpha.parts()) r *= no_global_descent_count(p);
    return r;
}

} // namespace

TEST_CASE("composition basics and validation") {
    const Composition alpha({2, 1, 3, 2});
    CHECK(alpha.size() == 8);
    CHECK(alpha.length() == 4);
    CHECK(Composition{}.size() == 0);
    CHECK_THROWS_AS(Composition({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({-1}), std::invalid_argument);
}

TEST_CASE("descent sets") {
    CHECK(Composition({2, 1, 3, 2}).descent_set() == std::set<int>{2, 3, 6});
    CHECK(Composition({5}).descent_set().empty());
    CHECK(Composition({1, 1}).descent_set() == std::set<int>{1});
    CHECK(Composition{}.descent_set().empty());
}

TEST_CASE("descents determine the composition") {
    for (int n = 0; n <= 7; ++n)
        for (const Composition& alpha : compositions(n)) {
            CHECK(composition_from_descents(n, alpha.descent_set()) == alpha);
        }
    CHECK_THROWS_AS(composition_from_descents(3, {3}), std::invalid_argument);
}

TEST_CASE("union of compositions") {
    CHECK(union_composition(Composition({2}), Composition({1, 1})) == Composition({1, 1}));
    CHECK(union_composition(Composition({3}), Composition({1, 2})) == Composition({1, 2}));
    CHECK_THROWS_AS(union_composition(Composition({2}), Composition({3})),
                    std::invalid_argument);
    for (const Composition& alpha : compositions(6)) {
        CHECK(union_composition(alpha, alpha) == alpha);
        for (const Composition& beta : compositions(6)) {
            const Composition u = union_composition(alpha, beta);
            std::set<int> expect = alpha.descent_set();
            const std::set<int> db = beta.descent_set();
            expect.insert(db.begin(), db.end());
            CHECK(u.descent_set() == expect);
            CHECK(u == union_composition(beta, alpha));
        }
    }
}

TEST_CASE("refinement order matches descent-set containment") {
    // (2,2,1) is finer than (4,1).
    CHECK(composition_refines(Composition({2, 2, 1}), Composition({4, 1})));
    CHECK_FALSE(composition_refines(Composition({4, 1}), Composition({2, 2, 1})));
    for (const Composition& fine : compositions(5))
        for (const Composition& coarse : compositions(5)) {
            const std::set<int> df = fine.descent_set();
            const std::set<int> dc = coarse.descent_set();
            const bool expect = std::includes(df.begin(), df.end(), dc.begin(), dc.end());
            CHECK(composition_refines(fine, coarse) == expect);
        }
}

TEST_CASE("composition enumeration is lexicographic and complete") {
    CHECK(compositions(0).size() == 1);
    CHECK(compositions(0)[0] == Composition{});
    for (int n = 1; n <= 8; ++n) {
        const auto comps = compositions(n);
        CHECK(static_cast<int>(comps.size()) == 1 << (n - 1));
        for (std::size_t i = 0; i + 1 < comps.size(); ++i) CHECK(comps[i] < comps[i + 1]);
        for (const Composition& c : comps) CHECK(c.size() == n);
    }
    const auto c3 = compositions(3);
    CHECK(c3[0] == Composition({1, 1, 1}));
    CHECK(c3[1] == Composition({1, 2}));
    CHECK(c3[2] == Composition({2, 1}));
    CHECK(c3[3] == Composition({3}));
}

TEST_CASE("integer partitions normalize and enumerate") {
    CHECK(IntegerPartition({1, 3, 1}).parts() == std::vector<int>{3, 1, 1});
    CHECK_THROWS_AS(IntegerPartition({0}), std::invalid_argument);
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) {
        const auto parts = integer_partitions(n);
        CHECK(static_cast<int>(parts.size()) == counts[n]);
        std::set<IntegerPartition> distinct(parts.begin(), parts.end());
        CHECK(distinct.size() == parts.size());
        for (const auto& p : parts) CHECK(p.size() == n);
    }
    CHECK(sorted_partition(Composition({1, 3, 2})) == IntegerPartition({3, 2, 1}));
}

TEST_CASE("factorial statistics") {
    CHECK(parts_factorial(IntegerPartition({2, 1, 1})) == 2);
    CHECK(multiplicity_factorial(IntegerPartition({2, 1, 1})) == 2);
    CHECK(parts_factorial(IntegerPartition{}) == 1);
    CHECK(multiplicity_factorial(IntegerPartition{}) == 1);
    CHECK(parts_factorial(IntegerPartition({3, 3})) == 36);
    CHECK(multiplicity_factorial(IntegerPartition({3, 3})) == 2);
    CHECK(parts_factorial(Composition({2, 1, 3, 2})) == 24);
}

TEST_CASE("no-global-descent counts") {
    const Integer expected[] = {1, 1, 3, 13, 71, 461, 3447, 29093};
    for (int n = 1; n <= 8; ++n) CHECK(no_global_descent_count(n) == expected[n - 1]);
    for (int n = 1; n <= 7; ++n) CHECK(no_global_descent_count(n) == brute_no_global_descent(n));
    CHECK_THROWS_AS(no_global_descent_count(0), std::invalid_argument);
}

TEST_CASE("a_alpha sums over all compositions give n!") {
    for (int n = 1; n <= 8; ++n) {
        Integer sum = 0;
        for (const Composition& alpha : compositions(n)) sum += a_product(alpha);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("a_beta summed over refinements of alpha gives alpha!") {
    for (int n = 1; n <= 7; ++n)
        for (const Composition& alpha : compositions(n)) {
            Integer sum = 0;
            for (const Composition& beta : compositions(n))
                if (composition_refines(beta, alpha)) sum += a_product(beta);
            CHECK(sum == parts_factorial(alpha));
        }
}

TEST_CASE("exact scalar helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(int_pow(Integer(3), 4) == 81);
    CHECK(int_pow(Integer(10), 0) == 1);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}
