#include "ncsym/composition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ncsym {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::set<int> Composition::descent_set() const {
    std::set<int> d;
    int s = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        s += parts_[i];
        d.insert(s);
    }
    return d;
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int IntegerPartition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition composition_from_descents(int n, const std::set<int>& descents) {
    if (n == 0) return Composition{};
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d <= 0 || d >= n) throw std::invalid_argument("descent out of range");
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition union_composition(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("union_composition: size mismatch");
    std::set<int> d = a.descent_set();
    const std::set<int> db = b.descent_set();
    d.insert(db.begin(), db.end());
    return composition_from_descents(a.size(), d);
}

bool composition_refines(const Composition& fine, const Composition& coarse) {
    if (fine.size() != coarse.size()) throw std::invalid_argument("composition_refines: size mismatch");
    const std::set<int> df = fine.descent_set();
    const std::set<int> dc = coarse.descent_set();
    return std::includes(df.begin(), df.end(), dc.begin(), dc.end());
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<IntegerPartition> integer_partitions(int n) {
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= std::min(rest, maxpart); ++p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

IntegerPartition sorted_partition(const Composition& a) {
    return IntegerPartition(a.parts());
}

Integer parts_factorial(const Composition& a) {
    Integer r = 1;
    for (int p : a.parts()) r *= factorial(p);
    return r;
}

Integer parts_factorial(const IntegerPartition& p) {
    Integer r = 1;
    for (int q : p.parts()) r *= factorial(q);
    return r;
}

Integer multiplicity_factorial(const IntegerPartition& p) {
    std::map<int, int> mult;
    for (int q : p.parts()) ++mult[q];
    Integer r = 1;
    for (const auto& [part, m] : mult) r *= factorial(m);
    return r;
}

Integer no_global_descent_count(int n) {
    if (n < 1) throw std::invalid_argument("no_global_descent_count: n must be >= 1");
    std::vector<Integer> a(n + 1);
    a[1] = 1;
    for (int m = 2; m <= n; ++m) {
        Integer s = 0;
        for (int i = 1; i < m; ++i) s += a[i] * factorial(m - i);
        a[m] = factorial(m) - s;
    }
    return a[n];
}

} // namespace ncsym
