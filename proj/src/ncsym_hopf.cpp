#include "ncsym/ncsym_hopf.hpp"

#include <cassert>
#include <functional>

#include "ncsym/hopf.hpp"

namespace ncsym {

namespace {

// Enumerate partial matchings between the blocks of a and the blocks of b;
// matched pairs merge across the cut, unmatched blocks pass through.
void matchings(const SetPartition& a, const SetPartition& b, int next_a,
               std::vector<int>& partner, std::vector<char>& used_b, NCSymElem& out) {
    const int la = a.num_blocks();
    if (next_a == la) {
        std::vector<std::vector<int>> blocks;
        const int shift = a.size();
        std::vector<char> merged_b(b.num_blocks(), 0);
        for (int i = 0; i < la; ++i) {
            std::vector<int> blk = a.blocks()[i];
            if (partner[i] >= 0) {
                merged_b[partner[i]] = 1;
                for (int e : b.blocks()[partner[i]]) blk.push_back(e + shift);
            }
            blocks.push_back(std::move(blk));
        }
        for (int j = 0; j < b.num_blocks(); ++j) {
            if (merged_b[j]) continue;
            std::vector<int> blk;
            for (int e : b.blocks()[j]) blk.push_back(e + shift);
            blocks.push_back(std::move(blk));
        }
        const std::size_t before = out.term_count();
        out.add_term(SetPartition::from_blocks(std::move(blocks)), 1);
        assert(out.term_count() == before + 1 && "product structure constants must be 0/1");
        (void)before;
        return;
    }
    partner[next_a] = -1;
    matchings(a, b, next_a + 1, partner, used_b, out);
    for (int j = 0; j < b.num_blocks(); ++j) {
        if (used_b[j]) continue;
        used_b[j] = 1;
        partner[next_a] = j;
        matchings(a, b, next_a + 1, partner, used_b, out);
        partner[next_a] = -1;
        used_b[j] = 0;
    }
}

} // namespace

NCSymElem ncsym_product(const SetPartition& a, const SetPartition& b) {
    NCSymElem out;
    std::vector<int> partner(a.num_blocks(), -1);
    std::vector<char> used_b(b.num_blocks(), 0);
    matchings(a, b, 0, partner, used_b, out);
    return out;
}

NCSymElem ncsym_product(const NCSymElem& x, const NCSymElem& y) {
    return bilinear_extend([](const SetPartition& a, const SetPartition& b) { return ncsym_product(a, b); },
                           x, y);
}

NCSymTensor ncsym_coproduct(const SetPartition& a) {
    NCSymTensor out;
    const int l = a.num_blocks();
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
        std::vector<int> s, sc;
        for (int i = 0; i < l; ++i) ((mask >> i) & 1u ? s : sc).push_back(i + 1);
        out.add_term({restrict_blocks(a, s), restrict_blocks(a, sc)}, 1);
    }
    return out;
}

NCSymTensor ncsym_coproduct(const NCSymElem& x) {
    return linear_extend([](const SetPartition& a) { return ncsym_coproduct(a); }, x);
}

Rational ncsym_counit(const NCSymElem& x) {
    return x.coefficient(SetPartition{});
}

NCSymElem ncsym_antipode(const NCSymElem& x) {
    thread_local AntipodeEngine<SetPartition> engine(
        [](const SetPartition& a, const SetPartition& b) { return ncsym_product(a, b); },
        [](const SetPartition& a) { return ncsym_coproduct(a); },
        [](const SetPartition& a) { return a.size(); }, SetPartition{});
    return engine.antipode(x);
}

NCSymTensor ncsym_tensor_product(const NCSymTensor& x, const NCSymTensor& y) {
    NCSymTensor out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            const NCSymElem left = ncsym_product(kx.first, ky.first);
            const NCSymElem right = ncsym_product(kx.second, ky.second);
            for (const auto& [kl, cl] : left.terms())
                for (const auto& [kr, cr] : right.terms())
                    out.add_term({kl, kr}, cx * cy * cl * cr);
        }
    return out;
}

} // namespace ncsym
