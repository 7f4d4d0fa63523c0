#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "ncsym/lincomb.hpp"

namespace ncsym {

// Antipode of a graded connected bialgebra, computed from the basis-level
// product and coproduct through the recursion
//   S(k) = - sum a * S(b)
// over the terms a (x) b of Delta(k) other than 1 (x) k; every surviving b
// has degree strictly below deg(k), so memoizing per basis key terminates.
// Shared by NCSym, NSym, and Sym. Instances are not thread-safe; confine
// one engine per thread.
template <class K>
class AntipodeEngine {
public:
    using Product = std::function<LinComb<K>(const K&, const K&)>;
    using Coproduct = std::function<LinComb<std::pair<K, K>>(const K&)>;
    using Degree = std::function<int(const K&)>;

    AntipodeEngine(Product product, Coproduct coproduct, Degree degree, K unit)
        : product_(std::move(product)),
          coproduct_(std::move(coproduct)),
          degree_(std::move(degree)),
          unit_(std::move(unit)) {}

    LinComb<K> antipode_basis(const K& key) {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LinComb<K> result;
        if (degree_(key) == 0) {
            if (!(key == unit_)) throw std::logic_error("degree-0 basis element is not the unit");
            result = LinComb<K>(unit_);
        } else {
            const auto cop = coproduct_(key);
            for (const auto& [pair, c] : cop.terms()) {
                const auto& [a, b] = pair;
                if (degree_(a) == 0) continue; // the 1 (x) key term
                LinComb<K> img = linear_extend(
                    [&](const K& sb) { return product_(a, sb); }, antipode_basis(b));
                img *= -c;
                result += img;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    LinComb<K> antipode(const LinComb<K>& x) {
        return linear_extend([&](const K& k) { return antipode_basis(k); }, x);
    }

private:
    Product product_;
    Coproduct coproduct_;
    Degree degree_;
    K unit_;
    std::map<K, LinComb<K>> memo_;
};

} // namespace ncsym
