#pragma once

#include <vector>

#include "ncsym/rational.hpp"

namespace ncsym {

// Truncated formal power series with exact integer coefficients. Every series
// carries its truncation degree; binary operations truncate to the smaller of
// the two operands so no coefficient is ever reported beyond what both inputs
// determine.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Integer> coeffs);
    static PowerSeries one(int truncation);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& operator[](int degree) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    bool operator==(const PowerSeries& o) const = default;

    // Multiplicative inverse; requires constant term 1.
    PowerSeries reciprocal() const;

private:
    std::vector<Integer> coeffs_{Integer(0)};
};

// Hilbert series of the invariant algebra in n noncommuting variables:
// coefficient at m counts set partitions of [m] with at most n blocks.
PowerSeries hilbert_B(int n, int max_degree);

// Generating series of the free generators, W_n = 1 - 1/B_n; coefficient at m
// counts nonsplitable set partitions of [m] with at most n blocks.
PowerSeries hilbert_W(int n, int max_degree);

// Hilbert series of the coinvariant quotient: coefficient at k is
// n^k - sum_{i<=k} w_{i,n} n^{k-i}.
PowerSeries hilbert_C(int n, int max_degree);

// Hilbert series of the full word algebra, 1/(1-nq): coefficient n^k.
PowerSeries hilbert_T(int n, int max_degree);

// Checks B_n * C_n = T_n coefficientwise up to max_degree.
bool chevalley_series_check(int n, int max_degree);

} // namespace ncsym
