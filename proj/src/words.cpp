#include "ncsym/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ncsym {

SetPartition word_type(const Word& w) {
    std::map<int, std::vector<int>> positions;
    for (std::size_t i = 0; i < w.size(); ++i) positions[w[i]].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [letter, pos] : positions) blocks.push_back(std::move(pos));
    return SetPartition::from_blocks(std::move(blocks));
}

WordPoly expand_m(const SetPartition& a, int n) {
    WordPoly out;
    const int l = a.num_blocks();
    if (l > n) return out;
    const std::vector<int> rgs = a.rgs();
    std::vector<int> letter(l + 1, 0);
    std::vector<char> used(n + 1, 0);
    std::function<void(int)> rec = [&](int block) {
        if (block > l) {
            Word w(a.size());
            for (int i = 0; i < a.size(); ++i) w[i] = letter[rgs[i]];
            out.add_term(w, 1);
            return;
        }
        for (int x = 1; x <= n; ++x) {
            if (used[x]) continue;
            used[x] = 1;
            letter[block] = x;
            rec(block + 1);
            used[x] = 0;
        }
    };
    rec(1);
    return out;
}

WordPoly sigma_act(const std::vector<int>& sigma, const WordPoly& p) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> hit(n + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || hit[v]) throw std::invalid_argument("sigma_act: not a bijection");
        hit[v] = 1;
    }
    WordPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word img(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 1 || w[i] > n) throw std::invalid_argument("sigma_act: letter outside alphabet");
            img[i] = sigma[w[i] - 1];
        }
        out.add_term(img, c);
    }
    return out;
}

Word leading_term(const WordPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
    return p.terms().begin()->first;
}

Word leading_word_of_type(const SetPartition& a) {
    return a.rgs();
}

WordPoly shuffle(const Word& u, const Word& v) {
    WordPoly out;
    const std::size_t total = u.size() + v.size();
    std::vector<char> pick(total, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(u.size()), 1);
    do {
        Word w(total);
        std::size_t iu = 0, iv = 0;
        for (std::size_t i = 0; i < total; ++i) w[i] = pick[i] ? u[iu++] : v[iv++];
        out.add_term(w, 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

WordPoly shuffle(const WordPoly& p, const WordPoly& q) {
    return bilinear_extend([](const Word& u, const Word& v) { return shuffle(u, v); }, p, q);
}

WordPoly hausdorff_derivative(int letter, const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms())
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != letter) continue;
            Word sub;
            sub.reserve(w.size() - 1);
            sub.insert(sub.end(), w.begin(), w.begin() + static_cast<long>(i));
            sub.insert(sub.end(), w.begin() + static_cast<long>(i) + 1, w.end());
            out.add_term(sub, c);
        }
    return out;
}

WordPoly twisted_derivative(int letter, const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms()) {
        if (w.empty() || w.front() != letter) continue;
        out.add_term(Word(w.begin() + 1, w.end()), c);
    }
    return out;
}

WordPoly apply_operator(const WordPoly& f, DerivativeMode mode, const WordPoly& p) {
    WordPoly out;
    for (const auto& [fw, c] : f.terms()) {
        WordPoly cur = p;
        for (auto it = fw.rbegin(); it != fw.rend() && !cur.is_zero(); ++it)
            cur = mode == DerivativeMode::hausdorff ? hausdorff_derivative(*it, cur)
                                                    : twisted_derivative(*it, cur);
        cur *= c;
        out += cur;
    }
    return out;
}

Rational scalar_product(const WordPoly& p, const WordPoly& q) {
    const WordPoly& small = p.term_count() <= q.term_count() ? p : q;
    const WordPoly& large = p.term_count() <= q.term_count() ? q : p;
    Rational s = 0;
    for (const auto& [w, c] : small.terms()) s += c * large.coefficient(w);
    return s;
}

WordPoly vandermonde(int n) {
    WordPoly out;
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i + 1;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pi[i] > pi[j]) ++inversions;
        Word w;
        for (int j = 1; j <= n; ++j)
            for (int rep = 0; rep < pi[j - 1] - 1; ++rep) w.push_back(n + 1 - j);
        out.add_term(w, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

WordPoly power_sum(int k, int n) {
    WordPoly out;
    for (int i = 1; i <= n; ++i) out.add_term(Word(k, i), 1);
    return out;
}

BiWordPoly biword_expand(const NCSymElem& f, int n) {
    BiWordPoly out;
    for (const auto& [a, c] : f.terms()) {
        const WordPoly expanded = expand_m(a, 2 * n);
        for (const auto& [w, cw] : expanded.terms()) {
            Word x, y;
            for (int letter : w)
                if (letter <= n)
                    x.push_back(letter);
                else
                    y.push_back(letter - n);
            out.add_term({std::move(x), std::move(y)}, c * cw);
        }
    }
    return out;
}

BiWordPoly biword_product(const BiWordPoly& p, const BiWordPoly& q) {
    BiWordPoly out;
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) {
            Word x = a.first, y = a.second;
            x.insert(x.end(), b.first.begin(), b.first.end());
            y.insert(y.end(), b.second.begin(), b.second.end());
            out.add_term({std::move(x), std::move(y)}, ca * cb);
        }
    return out;
}

} // namespace ncsym
