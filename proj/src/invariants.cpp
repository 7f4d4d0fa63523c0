#include "ncsym/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "ncsym/matrix.hpp"

namespace ncsym {

namespace {

NCSymElem truncate_blocks(const NCSymElem& x, int n) {
    NCSymElem out;
    for (const auto& [a, c] : x.terms())
        if (a.num_blocks() <= n) out.add_term(a, c);
    return out;
}

} // namespace

NCSymElem wolf_basis_expand(const SetPartition& b, int n) {
    if (b.num_blocks() > n)
        throw std::invalid_argument("wolf_basis_expand: partition has more than n blocks");
    const std::vector<SetPartition> factors = split_decompose(b);
    NCSymElem out(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i)
        out = truncate_blocks(ncsym_product(out, NCSymElem(factors[i])), n);
    return out;
}

std::vector<Word> suffix_set(int n, int max_degree) {
    std::vector<Word> out;
    for (int m = 1; m <= max_degree; ++m)
        for (const auto& a : enumerate_set_partitions(m, n))
            if (is_nonsplitable(a)) out.push_back(leading_word_of_type(a));
    std::sort(out.begin(), out.end(), [](const Word& u, const Word& v) {
        if (u.size() != v.size()) return u.size() < v.size();
        return u < v;
    });
    // A proper suffix relation between leading words would contradict
    // nonsplitability, so treat one as an internal error.
    for (const auto& u : out)
        for (const auto& v : out) {
            if (u.size() >= v.size()) continue;
            if (std::equal(u.rbegin(), u.rend(), v.rbegin()))
                throw std::logic_error("suffix_set: suffix property violated");
        }
    return out;
}

std::vector<Word> coinvariant_basis(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("coinvariant_basis: n, k >= 0");
    std::vector<Word> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (n == 0) return out;
    const std::vector<Word> suffixes = suffix_set(n, k);
    std::set<Word> forbidden(suffixes.begin(), suffixes.end());
    auto ends_with_forbidden = [&](const Word& w) {
        for (std::size_t len = 1; len <= w.size(); ++len)
            if (forbidden.count(Word(w.end() - len, w.end()))) return true;
        return false;
    };
    Word w(k, 1);
    for (;;) {
        if (!ends_with_forbidden(w)) out.push_back(w);
        int pos = k - 1;
        while (pos >= 0 && w[pos] == n) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

namespace {

// Words of degree d over [n] in lex order, with their positions.
std::vector<Word> degree_words(int n, int d) {
    std::vector<Word> out;
    Word w(d, 1);
    if (d == 0) {
        out.push_back(w);
        return out;
    }
    for (;;) {
        out.push_back(w);
        int pos = d - 1;
        while (pos >= 0 && w[pos] == n) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

int word_index(const Word& w, int n) {
    int idx = 0;
    for (int letter : w) idx = idx * n + (letter - 1);
    return idx;
}

// Joint kernel dimension of a family of operators on the degree-d word space.
// Rows are the operator images coordinatized over lex-ordered words of the
// image degree.
int joint_kernel_dimension(int n, int d, const std::vector<std::pair<WordPoly, DerivativeMode>>& ops) {
    const std::vector<Word> basis = degree_words(n, d);
    const int cols = static_cast<int>(basis.size());
    std::vector<int> row_offset;
    int total_rows = 0;
    for (const auto& [op, mode] : ops) {
        row_offset.push_back(total_rows);
        if (op.is_zero()) continue;
        const int op_degree = static_cast<int>(op.terms().begin()->first.size());
        int image_dim = 1;
        for (int i = 0; i < d - op_degree; ++i) image_dim *= n;
        total_rows += image_dim;
    }
    if (total_rows == 0) return cols;
    Matrix<Rational> m(total_rows, cols);
    for (int j = 0; j < cols; ++j) {
        const WordPoly unit_word(basis[j]);
        for (std::size_t t = 0; t < ops.size(); ++t) {
            const WordPoly image = apply_operator(ops[t].first, ops[t].second, unit_word);
            for (const auto& [w, c] : image.terms())
                m(row_offset[t] + word_index(w, n), j) = c;
        }
    }
    return cols - rank(m);
}

} // namespace

int mhar_dimension(int n, int d) {
    if (n < 1 || n > 3 || d < 0 || d > 6)
        throw std::invalid_argument("mhar_dimension: bounds are 1 <= n <= 3, 0 <= d <= 6");
    std::vector<std::pair<WordPoly, DerivativeMode>> ops;
    for (int k = 1; k <= std::min(n, d); ++k)
        ops.emplace_back(power_sum(k, n), DerivativeMode::hausdorff);
    return joint_kernel_dimension(n, d, ops);
}

int nchar_dimension(int n, int d) {
    if (n < 1 || n > 3 || d < 0 || d > 5)
        throw std::invalid_argument("nchar_dimension: bounds are 1 <= n <= 3, 0 <= d <= 5");
    std::vector<std::pair<WordPoly, DerivativeMode>> ops;
    for (int m = 1; m <= d; ++m)
        for (const auto& a : enumerate_set_partitions(m, n))
            ops.emplace_back(expand_m(a, n), DerivativeMode::twisted);
    return joint_kernel_dimension(n, d, ops);
}

} // namespace ncsym
