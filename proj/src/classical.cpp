#include "ncsym/classical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ncsym/hopf.hpp"

namespace ncsym {

namespace {

// Distinct arrangements of lambda's parts padded with zeros to length len.
std::vector<std::vector<int>> padded_arrangements(const IntegerPartition& lambda, int len) {
    std::vector<std::vector<int>> out;
    if (lambda.length() > len) return out;
    std::vector<int> v(len, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), v.begin());
    std::sort(v.begin(), v.end());
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

SymElem sym_m_product(const IntegerPartition& lambda, const IntegerPartition& mu) {
    SymElem out;
    const int n = lambda.size() + mu.size();
    const int max_len = lambda.length() + mu.length();
    for (const IntegerPartition& nu : integer_partitions(n)) {
        if (nu.length() > max_len) continue;
        Integer count = 0;
        for (const auto& alpha : padded_arrangements(lambda, nu.length())) {
            std::vector<int> beta(nu.length());
            bool ok = true;
            for (int i = 0; i < nu.length() && ok; ++i) {
                beta[i] = nu.parts()[i] - alpha[i];
                if (beta[i] < 0) ok = false;
            }
            if (!ok) continue;
            std::vector<int> nonzero;
            for (int b : beta)
                if (b > 0) nonzero.push_back(b);
            std::sort(nonzero.begin(), nonzero.end(), std::greater<int>());
            if (nonzero == mu.parts()) ++count;
        }
        if (count != 0) out.add_term(nu, Rational(count));
    }
    return out;
}

SymElem sym_m_product(const SymElem& x, const SymElem& y) {
    return bilinear_extend(
        [](const IntegerPartition& a, const IntegerPartition& b) { return sym_m_product(a, b); }, x, y);
}

SymTensor sym_m_coproduct(const IntegerPartition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    SymTensor out;
    std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
    std::vector<int> take(items.size(), 0);
    while (true) {
        std::vector<int> left, right;
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (int k = 0; k < take[i]; ++k) left.push_back(items[i].first);
            for (int k = take[i]; k < items[i].second; ++k) right.push_back(items[i].first);
        }
        out.add_term({IntegerPartition(std::move(left)), IntegerPartition(std::move(right))}, 1);
        std::size_t i = 0;
        while (i < items.size() && take[i] == items[i].second) take[i++] = 0;
        if (i == items.size()) break;
        ++take[i];
    }
    return out;
}

SymTensor sym_m_coproduct(const SymElem& x) {
    return linear_extend([](const IntegerPartition& l) { return sym_m_coproduct(l); }, x);
}

SymElem sym_h_to_m(const IntegerPartition& lambda) {
    SymElem out(IntegerPartition{});
    for (int p : lambda.parts()) {
        SymElem hp;
        for (const IntegerPartition& nu : integer_partitions(p)) hp.add_term(nu, 1);
        out = sym_m_product(out, hp);
    }
    return out;
}

SymElem sym_h_to_m(const SymElem& h_expansion) {
    return linear_extend([](const IntegerPartition& l) { return sym_h_to_m(l); }, h_expansion);
}

SymElem sym_m_antipode(const SymElem& x) {
    thread_local AntipodeEngine<IntegerPartition> engine(
        [](const IntegerPartition& a, const IntegerPartition& b) { return sym_m_product(a, b); },
        [](const IntegerPartition& a) { return sym_m_coproduct(a); },
        [](const IntegerPartition& a) { return a.size(); }, IntegerPartition{});
    return engine.antipode(x);
}

NSymElem nsym_h_product(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return NSymElem(Composition(std::move(parts)));
}

NSymElem nsym_h_product(const NSymElem& x, const NSymElem& y) {
    return bilinear_extend([](const Composition& a, const Composition& b) { return nsym_h_product(a, b); },
                           x, y);
}

NSymTensor nsym_h_coproduct(const Composition& a) {
    NSymTensor out({Composition{}, Composition{}});
    for (int part : a.parts()) {
        NSymTensor next;
        for (const auto& [pair, c] : out.terms()) {
            for (int k = 0; k <= part; ++k) {
                std::vector<int> l = pair.first.parts(), r = pair.second.parts();
                if (k > 0) l.push_back(k);
                if (part - k > 0) r.push_back(part - k);
                next.add_term({Composition(std::move(l)), Composition(std::move(r))}, c);
            }
        }
        out = std::move(next);
    }
    return out;
}

NSymTensor nsym_h_coproduct(const NSymElem& x) {
    return linear_extend([](const Composition& a) { return nsym_h_coproduct(a); }, x);
}

Rational nsym_counit(const NSymElem& x) {
    return x.coefficient(Composition{});
}

NSymElem nsym_h_antipode(const NSymElem& x) {
    thread_local AntipodeEngine<Composition> engine(
        [](const Composition& a, const Composition& b) { return nsym_h_product(a, b); },
        [](const Composition& a) { return nsym_h_coproduct(a); },
        [](const Composition& a) { return a.size(); }, Composition{});
    return engine.antipode(x);
}

namespace {

// Enumerate the compositions coarser than alpha: descent subsets.
template <class F>
void for_each_coarser(const Composition& alpha, const F& f) {
    const std::set<int> d = alpha.descent_set();
    const std::vector<int> ds(d.begin(), d.end());
    for (unsigned mask = 0; mask < (1u << ds.size()); ++mask) {
        std::set<int> sub;
        for (std::size_t i = 0; i < ds.size(); ++i)
            if ((mask >> i) & 1u) sub.insert(ds[i]);
        f(composition_from_descents(alpha.size(), sub));
    }
}

} // namespace

NSymElem ribbon_to_h(const Composition& alpha) {
    NSymElem out;
    for_each_coarser(alpha, [&](const Composition& beta) {
        const int sign = (alpha.length() - beta.length()) % 2 == 0 ? 1 : -1;
        out.add_term(beta, sign);
    });
    return out;
}

NSymElem ribbon_to_h(const NSymElem& r_expansion) {
    return linear_extend([](const Composition& a) { return ribbon_to_h(a); }, r_expansion);
}

NSymElem h_to_ribbon(const Composition& alpha) {
    NSymElem out;
    for_each_coarser(alpha, [&](const Composition& beta) { out.add_term(beta, 1); });
    return out;
}

NSymElem h_to_ribbon(const NSymElem& h_expansion) {
    return linear_extend([](const Composition& a) { return h_to_ribbon(a); }, h_expansion);
}

NSymElem ribbon_product(const Composition& a, const Composition& b) {
    if (a.length() == 0 || b.length() == 0)
        throw std::invalid_argument("ribbon_product: compositions must be nonempty");
    std::vector<int> nearcat = a.parts();
    nearcat.back() += b.parts().front();
    nearcat.insert(nearcat.end(), b.parts().begin() + 1, b.parts().end());
    std::vector<int> cat = a.parts();
    cat.insert(cat.end(), b.parts().begin(), b.parts().end());
    NSymElem out(Composition(std::move(nearcat)));
    out.add_term(Composition(std::move(cat)), 1);
    return out;
}

NSymElem ribbon_product(const NSymElem& x, const NSymElem& y) {
    return bilinear_extend([](const Composition& a, const Composition& b) { return ribbon_product(a, b); },
                           x, y);
}

} // namespace ncsym
