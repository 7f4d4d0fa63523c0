#include "ncsym/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsym {

PowerSeries::PowerSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: need at least the constant term");
}

PowerSeries PowerSeries::one(int truncation) {
    if (truncation < 0) throw std::invalid_argument("PowerSeries: negative truncation");
    std::vector<Integer> c(truncation + 1, Integer(0));
    c[0] = 1;
    return PowerSeries(std::move(c));
}

const Integer& PowerSeries::operator[](int degree) const {
    if (degree < 0 || degree > truncation())
        throw std::out_of_range("PowerSeries: degree beyond truncation");
    return coeffs_[degree];
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int d = std::min(a.truncation(), b.truncation());
    std::vector<Integer> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int d = std::min(a.truncation(), b.truncation());
    std::vector<Integer> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int d = std::min(a.truncation(), b.truncation());
    std::vector<Integer> c(d + 1, Integer(0));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeffs_[0] != 1)
        throw std::invalid_argument("PowerSeries::reciprocal: constant term must be 1");
    // r_0 = 1 and r_k = -sum_{i=1..k} a_i r_{k-i}.
    std::vector<Integer> r(coeffs_.size(), Integer(0));
    r[0] = 1;
    for (std::size_t k = 1; k < r.size(); ++k)
        for (std::size_t i = 1; i <= k; ++i) r[k] -= coeffs_[i] * r[k - i];
    return PowerSeries(std::move(r));
}

PowerSeries hilbert_B(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("hilbert_B: n >= 1");
    if (max_degree < 0) throw std::invalid_argument("hilbert_B: max_degree >= 0");
    // Stirling triangle S(m,k) = k S(m-1,k) + S(m-1,k-1), summed over k <= n.
    std::vector<Integer> c(max_degree + 1, Integer(0));
    c[0] = 1;
    std::vector<Integer> row{Integer(1)}; // S(0,0)
    for (int m = 1; m <= max_degree; ++m) {
        std::vector<Integer> next(m + 1, Integer(0));
        for (int k = 1; k <= m; ++k) {
            next[k] = row[k - 1];
            if (k < static_cast<int>(row.size())) next[k] += Integer(k) * row[k];
        }
        row = std::move(next);
        for (int k = 1; k <= std::min(m, n); ++k) c[m] += row[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries hilbert_W(int n, int max_degree) {
    const PowerSeries b = hilbert_B(n, max_degree);
    return PowerSeries::one(max_degree) - b.reciprocal();
}

PowerSeries hilbert_C(int n, int max_degree) {
    const PowerSeries w = hilbert_W(n, max_degree);
    std::vector<Integer> c(max_degree + 1, Integer(0));
    for (int k = 0; k <= max_degree; ++k) {
        c[k] = int_pow(n, k);
        for (int i = 1; i <= k; ++i) c[k] -= w[i] * int_pow(n, k - i);
    }
    return PowerSeries(std::move(c));
}

PowerSeries hilbert_T(int n, int max_degree) {
    if (n < 0) throw std::invalid_argument("hilbert_T: n >= 0");
    std::vector<Integer> c(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) c[k] = int_pow(n, k);
    return PowerSeries(std::move(c));
}

bool chevalley_series_check(int n, int max_degree) {
    return hilbert_B(n, max_degree) * hilbert_C(n, max_degree) == hilbert_T(n, max_degree);
}

} // namespace ncsym
