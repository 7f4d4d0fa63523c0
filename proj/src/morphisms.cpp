#include "ncsym/morphisms.hpp"

#include <stdexcept>

namespace ncsym {

SymElem chi_nsym(const NSymElem& x) {
    SymElem out;
    for (const auto& [alpha, c] : x.terms()) out.add_term(sorted_partition(alpha), c);
    return out;
}

SymElem chi_ncsym(const NCSymElem& x) {
    SymElem out;
    for (const auto& [a, c] : x.terms()) {
        const IntegerPartition lambda = a.shape();
        out.add_term(lambda, c * Rational(multiplicity_factorial(lambda)));
    }
    return out;
}

NCSymElem lift(const IntegerPartition& lambda) {
    const Rational coeff(parts_factorial(lambda), factorial(lambda.size()));
    NCSymElem out;
    for (const SetPartition& a : enumerate_set_partitions(lambda.size()))
        if (a.shape() == lambda) out.add_term(a, coeff);
    return out;
}

NCSymElem lift(const SymElem& m_expansion) {
    return linear_extend([](const IntegerPartition& l) { return lift(l); }, m_expansion);
}

NCSymElem inclusion_I(const Composition& alpha) {
    NCSymElem out(SetPartition{});
    for (int p : alpha.parts()) {
        NCSymElem factor;
        const Rational inv_fact(1, factorial(p));
        for (const SetPartition& a : enumerate_set_partitions(p))
            factor.add_term(a, inv_fact * Rational(parts_factorial(a.shape())));
        out = ncsym_product(out, factor);
    }
    return out;
}

NCSymElem inclusion_I(const NSymElem& h_expansion) {
    return linear_extend([](const Composition& a) { return inclusion_I(a); }, h_expansion);
}

Rational canonical_coefficient(const Composition& alpha, const Composition& beta) {
    return Rational(parts_factorial(union_composition(alpha, beta)), parts_factorial(alpha));
}

Matrix<Integer> union_factorial_matrix(int n) {
    const std::vector<Composition> comps = compositions(n);
    const int size = static_cast<int>(comps.size());
    Matrix<Integer> m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            m(i, j) = parts_factorial(union_composition(comps[i], comps[j]));
    return m;
}

DeterminantReport magic_determinant(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("magic_determinant: 1 <= n <= 7");
    DeterminantReport rep;
    const Matrix<Integer> m = union_factorial_matrix(n);
    rep.det = det_exact(m);

    const std::vector<Composition> comps = compositions(n);
    auto a_of = [](const Composition& c) {
        Integer r = 1;
        for (int p : c.parts()) r *= no_global_descent_count(p);
        return r;
    };
    rep.a_product = 1;
    for (const Composition& c : comps) rep.a_product *= a_of(c);
    rep.product_match = rep.det == rep.a_product;

    const int size = static_cast<int>(comps.size());
    Matrix<Integer> refinement(size, size), diag(size, size);
    for (int i = 0; i < size; ++i) {
        diag(i, i) = a_of(comps[i]);
        for (int j = 0; j < size; ++j)
            refinement(i, j) = composition_refines(comps[j], comps[i]) ? 1 : 0;
    }
    rep.factorization_match = refinement * diag * refinement.transpose() == m;
    return rep;
}

NCSymElem rho_quotient(const NCSymElem& x) {
    NCSymElem out;
    for (const auto& [a, c] : x.terms())
        if (!has_crossings(a)) out.add_term(a, c);
    return out;
}

NSymElem iota(const NCSymElem& x) {
    NSymElem out;
    for (const auto& [a, c] : x.terms()) {
        if (a.num_blocks() > 2) throw std::invalid_argument("iota: term with more than two blocks");
        if (a.size() == 0)
            out.add_term(Composition{}, c);
        else
            out.add_term(ribbon_composition(a), c);
    }
    return out;
}

NCSymElem ncsym2_product(const SetPartition& a, const SetPartition& b) {
    if (a.num_blocks() > 2 || b.num_blocks() > 2)
        throw std::invalid_argument("ncsym2_product: at most two blocks");
    auto block_or_empty = [](const SetPartition& p, int i) {
        return i < p.num_blocks() ? p.blocks()[i] : std::vector<int>{};
    };
    auto shifted = [&](const SetPartition& p, int i) {
        std::vector<int> blk = block_or_empty(p, i);
        for (int& e : blk) e += a.size();
        return blk;
    };
    auto assemble = [&](std::vector<int> first, std::vector<int> second) {
        std::vector<std::vector<int>> blocks;
        if (!first.empty()) blocks.push_back(std::move(first));
        if (!second.empty()) blocks.push_back(std::move(second));
        return SetPartition::from_blocks(std::move(blocks));
    };
    auto unite = [](std::vector<int> x, const std::vector<int>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };

    const SetPartition straight =
        assemble(unite(block_or_empty(a, 0), shifted(b, 0)), unite(block_or_empty(a, 1), shifted(b, 1)));
    const SetPartition crossed =
        assemble(unite(block_or_empty(a, 0), shifted(b, 1)), unite(block_or_empty(a, 1), shifted(b, 0)));
    NCSymElem out(straight);
    if (!(crossed == straight)) out.add_term(crossed, 1);
    return out;
}

NCSymElem zeta(const Composition& alpha) {
    const SetPartition canon = canonical_from_composition(alpha);
    const int l = canon.num_blocks();
    NCSymElem out;
    for (const SetPartition& grouping : enumerate_set_partitions(l)) {
        bool glues_adjacent = false;
        for (const auto& g : grouping.blocks())
            for (std::size_t i = 0; i + 1 < g.size() && !glues_adjacent; ++i)
                if (g[i + 1] == g[i] + 1) glues_adjacent = true;
        if (glues_adjacent) continue;
        std::vector<std::vector<int>> blocks;
        for (const auto& g : grouping.blocks()) {
            std::vector<int> blk;
            for (int idx : g) {
                const auto& src = canon.blocks()[idx - 1];
                blk.insert(blk.end(), src.begin(), src.end());
            }
            blocks.push_back(std::move(blk));
        }
        out.add_term(SetPartition::from_blocks(std::move(blocks)), 1);
    }
    return out;
}

NCSymElem zeta(const NSymElem& r_expansion) {
    return linear_extend([](const Composition& a) { return zeta(a); }, r_expansion);
}

std::vector<DiagramCheck> diagram_checks(int d) {
    std::vector<DiagramCheck> out;

    bool pass = true;
    for (int n = 0; n <= d && pass; ++n)
        for (const Composition& alpha : compositions(n)) {
            const SymElem via_ncsym = chi_ncsym(inclusion_I(alpha));
            const SymElem direct = sym_h_to_m(chi_nsym(NSymElem(alpha)));
            if (!(via_ncsym == direct)) {
                pass = false;
                break;
            }
        }
    out.push_back({"chi_ncsym o inclusion = chi_nsym on h_alpha", pass});

    pass = true;
    for (int n = 0; n <= d && pass; ++n)
        for (const IntegerPartition& lambda : integer_partitions(n)) {
            if (!(chi_ncsym(lift(lambda)) == SymElem(lambda))) {
                pass = false;
                break;
            }
        }
    out.push_back({"chi_ncsym o lift = id on m_lambda", pass});

    pass = true;
    for (int n = 0; n <= d && pass; ++n)
        for (const IntegerPartition& lambda : integer_partitions(n)) {
            const NCSymTensor lhs = ncsym_coproduct(lift(lambda));
            NCSymTensor rhs;
            const SymTensor cop = sym_m_coproduct(lambda);
            for (const auto& [pair, c] : cop.terms()) {
                NCSymTensor t = tensor(lift(pair.first), lift(pair.second));
                t *= c;
                rhs += t;
            }
            if (!(lhs == rhs)) {
                pass = false;
                break;
            }
        }
    out.push_back({"coproduct o lift = (lift (x) lift) o coproduct on m_lambda", pass});

    return out;
}

bool diagram_check(int d) {
    for (const DiagramCheck& c : diagram_checks(d))
        if (!c.pass) return false;
    return true;
}

} // namespace ncsym
