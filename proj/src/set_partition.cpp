#include "ncsym/set_partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ncsym {

namespace {

void sort_and_validate(std::vector<std::vector<int>>& blocks, int* total) {
    int n = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("set partition blocks must be nonempty");
        std::sort(b.begin(), b.end());
        n += static_cast<int>(b.size());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    std::vector<char> seen(n + 1, 0);
    for (const auto& b : blocks)
        for (int e : b) {
            if (e < 1 || e > n || seen[e]) throw std::invalid_argument("blocks must partition {1,..,n}");
            seen[e] = 1;
        }
    *total = n;
}

} // namespace

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
    SetPartition a;
    a.blocks_ = std::move(blocks);
    sort_and_validate(a.blocks_, &a.n_);
    return a;
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    int maxlabel = 0;
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        const int label = rgs[i];
        if (label < 1 || label > maxlabel + 1) throw std::invalid_argument("not a restricted-growth string");
        if (label == maxlabel + 1) {
            blocks.emplace_back();
            ++maxlabel;
        }
        blocks[label - 1].push_back(static_cast<int>(i) + 1);
    }
    SetPartition a;
    a.blocks_ = std::move(blocks);
    a.n_ = static_cast<int>(rgs.size());
    return a;
}

SetPartition SetPartition::standardize(std::vector<std::vector<int>> sets) {
    std::vector<int> values;
    for (const auto& s : sets) {
        if (s.empty()) throw std::invalid_argument("standardize: sets must be nonempty");
        values.insert(values.end(), s.begin(), s.end());
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw std::invalid_argument("standardize: sets must be disjoint");
    auto rank = [&](int v) {
        return static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()) + 1;
    };
    for (auto& s : sets)
        for (int& v : s) v = rank(v);
    return from_blocks(std::move(sets));
}

std::vector<int> SetPartition::rgs() const {
    std::vector<int> r(n_);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int e : blocks_[b]) r[e - 1] = static_cast<int>(b) + 1;
    return r;
}

IntegerPartition SetPartition::shape() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    return IntegerPartition(std::move(sizes));
}

std::strong_ordering SetPartition::operator<=>(const SetPartition& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return rgs() <=> o.rgs();
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("meet: size mismatch");
    std::vector<std::vector<int>> blocks;
    for (const auto& ba : a.blocks())
        for (const auto& bb : b.blocks()) {
            std::vector<int> inter;
            std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) blocks.push_back(std::move(inter));
        }
    return SetPartition::from_blocks(std::move(blocks));
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("join: size mismatch");
    const int n = a.size();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (const auto* p : {&a, &b})
        for (const auto& blk : p->blocks())
            for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    std::vector<std::vector<int>> groups(n + 1);
    for (int e = 1; e <= n; ++e) groups[find(e)].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return SetPartition::from_blocks(std::move(blocks));
}

bool refines(const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("refines: size mismatch");
    const std::vector<int> rb = b.rgs();
    for (const auto& blk : a.blocks()) {
        const int label = rb[blk[0] - 1];
        for (int e : blk)
            if (rb[e - 1] != label) return false;
    }
    return true;
}

SetPartition shift_concat(const SetPartition& a, const SetPartition& b) {
    std::vector<std::vector<int>> blocks = a.blocks();
    for (const auto& blk : b.blocks()) {
        std::vector<int> shifted;
        shifted.reserve(blk.size());
        for (int e : blk) shifted.push_back(e + a.size());
        blocks.push_back(std::move(shifted));
    }
    return SetPartition::from_blocks(std::move(blocks));
}

SetPartition restrict_blocks(const SetPartition& a, const std::vector<int>& indices) {
    std::vector<std::vector<int>> selected;
    for (int i : indices) {
        if (i < 1 || i > a.num_blocks()) throw std::out_of_range("restrict_blocks: block index out of range");
        selected.push_back(a.blocks()[i - 1]);
    }
    if (selected.empty()) return SetPartition{};
    return SetPartition::standardize(std::move(selected));
}

SetPartition canonical_from_composition(const Composition& alpha) {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int p : alpha.parts()) {
        std::vector<int> blk(p);
        std::iota(blk.begin(), blk.end(), next);
        next += p;
        blocks.push_back(std::move(blk));
    }
    return SetPartition::from_blocks(std::move(blocks));
}

bool has_crossings(const SetPartition& a) {
    for (const auto& blk : a.blocks())
        if (blk.back() - blk.front() + 1 != static_cast<int>(blk.size())) return true;
    return false;
}

SetPartition compose(const SetPartition& a, const SetPartition& b) {
    const int m = a.size();
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < std::max(a.num_blocks(), b.num_blocks()); ++i) {
        std::vector<int> blk;
        if (i < a.num_blocks()) blk = a.blocks()[i];
        if (i < b.num_blocks())
            for (int e : b.blocks()[i]) blk.push_back(e + m);
        blocks.push_back(std::move(blk));
    }
    return SetPartition::from_blocks(std::move(blocks));
}

namespace {

constexpr int kNoTail = std::numeric_limits<int>::max();

// min(B_i minus [k]), or +infinity when the tail is empty.
int tail_min(const std::vector<int>& block, int k) {
    auto it = std::upper_bound(block.begin(), block.end(), k);
    return it == block.end() ? kNoTail : *it;
}

// A cut at k is valid iff the tail minima are nondecreasing along the
// min-ordered blocks; then blocks-intersect-[k] is a partition of [k] whose
// composition with the standardized tails reproduces the input.
bool valid_cut(const SetPartition& a, int k) {
    int prev = 0;
    for (const auto& blk : a.blocks()) {
        const int t = tail_min(blk, k);
        if (t < prev) return false;
        prev = t;
    }
    return true;
}

} // namespace

std::vector<SetPartition> split_decompose(const SetPartition& a) {
    if (a.size() == 0) throw std::invalid_argument("split_decompose: empty partition");
    for (int k = 1; k < a.size(); ++k) {
        if (!valid_cut(a, k)) continue;
        std::vector<std::vector<int>> head, tail;
        for (const auto& blk : a.blocks()) {
            std::vector<int> lo, hi;
            for (int e : blk) (e <= k ? lo : hi).push_back(e);
            if (!lo.empty()) head.push_back(std::move(lo));
            if (!hi.empty()) tail.push_back(std::move(hi));
        }
        std::vector<SetPartition> factors{SetPartition::from_blocks(std::move(head))};
        std::vector<SetPartition> rest = split_decompose(SetPartition::standardize(std::move(tail)));
        factors.insert(factors.end(), rest.begin(), rest.end());
        return factors;
    }
    return {a};
}

bool is_nonsplitable(const SetPartition& a) {
    if (a.size() == 0) throw std::invalid_argument("is_nonsplitable: empty partition");
    for (int k = 1; k < a.size(); ++k)
        if (valid_cut(a, k)) return false;
    return true;
}

Composition ribbon_composition(const SetPartition& a) {
    if (a.size() == 0 || a.num_blocks() > 2)
        throw std::invalid_argument("ribbon_composition: requires 1 <= l(A) <= 2");
    const std::vector<int> r = a.rgs();
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < a.size(); ++i) {
        if (r[i] == r[i - 1]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

std::vector<SetPartition> enumerate_set_partitions(int m, int max_blocks) {
    std::vector<SetPartition> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> rgs(m, 1);
    std::function<void(int, int)> rec = [&](int pos, int maxlabel) {
        if (pos == m) {
            out.push_back(SetPartition::from_rgs(rgs));
            return;
        }
        const int cap = max_blocks >= 0 ? std::min(maxlabel + 1, max_blocks) : maxlabel + 1;
        for (int label = 1; label <= cap; ++label) {
            rgs[pos] = label;
            rec(pos + 1, std::max(maxlabel, label));
        }
    };
    if (max_blocks == 0) return out;
    rec(1, 1);
    return out;
}

Integer count_nonsplitable(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("count_nonsplitable: m, n >= 1");
    Integer c = 0;
    for (const auto& a : enumerate_set_partitions(m, n))
        if (is_nonsplitable(a)) ++c;
    return c;
}

Integer bell_number(int m) {
    // Bell triangle recurrence over exact integers.
    std::vector<Integer> row{1};
    for (int i = 0; i < m; ++i) {
        std::vector<Integer> next{row.back()};
        for (const Integer& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

} // namespace ncsym
