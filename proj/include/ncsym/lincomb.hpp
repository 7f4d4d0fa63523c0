#pragma once

#include <map>
#include <utility>

#include "ncsym/rational.hpp"

namespace ncsym {

// Finite formal linear combination over an ordered basis-key type. Zero
// coefficients are never stored, so operator== is basis-expansion equality
// and iteration order is the key order (deterministic printing everywhere).
template <class K>
class LinComb {
public:
    using Terms = std::map<K, Rational>;

    LinComb() = default;
    explicit LinComb(const K& key, Rational c = 1) {
        if (c != 0) terms_[key] = std::move(c);
    }

    static LinComb zero() { return LinComb{}; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const K& key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    bool operator==(const LinComb&) const = default;

private:
    Terms terms_;
};

template <class K1, class K2>
LinComb<std::pair<K1, K2>> tensor(const LinComb<K1>& a, const LinComb<K2>& b) {
    LinComb<std::pair<K1, K2>> out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term({ka, kb}, ca * cb);
    return out;
}

// Lift a basis-level map K -> LinComb<R> to linear combinations.
template <class K, class F>
auto linear_extend(const F& f, const LinComb<K>& x) {
    decltype(f(std::declval<const K&>())) out;
    for (const auto& [k, c] : x.terms()) {
        auto img = f(k);
        img *= c;
        out += img;
    }
    return out;
}

// Lift a basis-level product K x K -> LinComb<R> bilinearly.
template <class K, class F>
auto bilinear_extend(const F& f, const LinComb<K>& x, const LinComb<K>& y) {
    decltype(f(std::declval<const K&>(), std::declval<const K&>())) out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            auto img = f(kx, ky);
            img *= cx * cy;
            out += img;
        }
    return out;
}

} // namespace ncsym
