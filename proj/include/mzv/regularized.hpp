#pragma once

#include "mzv/combination.hpp"

#include <cassert>
#include <map>
#include <string>
#include <utility>

namespace mzv {

// Exact decomposition of a regularized value as a polynomial in T with
// admissible-index combinations as coefficients: a map
// (T-degree, admissible index) -> rational.
class RegularizedZeta {
public:
    RegularizedZeta() = default;

    static RegularizedZeta admissible(const Index& k) {
        assert(k.admissible());
        RegularizedZeta z;
        z.terms_.emplace(std::make_pair(0, k), Rational(1));
        return z;
    }

    void add_term(int t_degree, const Index& k, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(t_degree, k);
        auto [it, inserted] = terms_.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RegularizedZeta& operator+=(const RegularizedZeta& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
        return *this;
    }

    void add_scaled(const RegularizedZeta& o, const Rational& s) {
        if (s == 0) return;
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c * s);
    }

    // Multiplication by T: shifts every T-degree up by one.
    RegularizedZeta times_T() const {
        RegularizedZeta z;
        for (const auto& [key, c] : terms_) z.terms_.emplace(std::make_pair(key.first + 1, key.second), c);
        return z;
    }

    const std::map<std::pair<int, Index>, Rational>& terms() const& { return terms_; }
    const std::map<std::pair<int, Index>, Rational>& terms() const&& = delete;

    int t_degree() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first);
        return d;
    }

    bool operator==(const RegularizedZeta&) const = default;

    // e.g. "ζ(2)T - ζ(1,2) - ζ(3)"; the empty index renders as a bare number.
    std::string str() const {
        if (terms_.empty()) return "0";
        // Sort by descending T-degree for readability.
        std::map<std::pair<int, Index>, Rational, std::greater<>> sorted(terms_.begin(), terms_.end());
        std::string s;
        bool first = true;
        for (const auto& [key, coeff] : sorted) {
            Rational a = coeff;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            const auto& [deg, index] = key;
            std::string body;
            if (!index.empty()) body += "ζ(" + index.str() + ")";
            if (deg == 1) body += "T";
            if (deg > 1) body += "T^" + std::to_string(deg);
            if (body.empty()) {
                s += rational_str_short(a);
            } else {
                if (a != 1) s += rational_str_short(a);
                s += body;
            }
        }
        return s;
    }

private:
    std::map<std::pair<int, Index>, Rational> terms_;
};

namespace detail {

inline int trailing_ones(const Index& k) {
    int t = 0;
    const auto& p = k.parts();
    for (auto it = p.rbegin(); it != p.rend() && *it == 1; ++it) ++t;
    return t;
}

}  // namespace detail

// The unique extension of the evaluation map to non-admissible indices that
// sends the depth-one index (1) to T and respects the harmonic product.
// For k = (v, 1), the product [v]*[1] contains [k] with multiplicity
// m = (number of trailing ones of k), so
//     m * reg(k) = reg(v) * T - reg([v]*[1] - m [k]),
// and every index on the right has strictly fewer trailing ones.
inline const RegularizedZeta& regularize(const Index& k) {
    thread_local std::map<Index, RegularizedZeta> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    RegularizedZeta result;
    if (k.admissible()) {
        result = RegularizedZeta::admissible(k);
    } else {
        Index v = k.prefix(k.depth() - 1);
        const auto& product = detail::harmonic_product_flat(v, Index{1});
        long long multiplicity = 0;
        for (const auto& [idx, c] : product)
            if (idx == k) multiplicity = c;
        assert(multiplicity == detail::trailing_ones(k));

        result.add_scaled(regularize(v).times_T(), Rational(1, multiplicity));
        for (const auto& [idx, c] : product) {
            if (idx == k) continue;
            assert(detail::trailing_ones(idx) < detail::trailing_ones(k));
            result.add_scaled(regularize(idx), Rational(-c, multiplicity));
        }
    }
    return cache.emplace(k, std::move(result)).first->second;
}

}  // namespace mzv
