#pragma once

#include "mzv/index.hpp"
#include "mzv/poly_scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

// Element of the free module on index symbols with PolyScalar coefficients.
// Plain rational combinations are the special case of constant coefficients.
class IndexCombination {
public:
    IndexCombination() = default;

    static IndexCombination zero() { return {}; }

    // The multiplicative unit [empty] of the harmonic product.
    static IndexCombination unit() { return single(Index{}); }

    static IndexCombination single(const Index& k, PolyScalar coeff = PolyScalar::one()) {
        IndexCombination u;
        if (!coeff.is_zero()) u.terms_.emplace(k, std::move(coeff));
        return u;
    }

    static IndexCombination single(const Index& k, const Rational& coeff) {
        return single(k, PolyScalar::constant(coeff));
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Index, PolyScalar>& terms() const& { return terms_; }
    const std::map<Index, PolyScalar>& terms() const&& = delete;

    PolyScalar coefficient(const Index& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? PolyScalar{} : it->second;
    }

    void add_term(const Index& k, const PolyScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    IndexCombination& operator+=(const IndexCombination& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    IndexCombination& operator-=(const IndexCombination& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend IndexCombination operator+(IndexCombination a, const IndexCombination& b) { return a += b; }
    friend IndexCombination operator-(IndexCombination a, const IndexCombination& b) { return a -= b; }

    IndexCombination operator-() const {
        IndexCombination u;
        for (const auto& [k, c] : terms_) u.terms_.emplace(k, -c);
        return u;
    }

    void add_scaled(const IndexCombination& o, const PolyScalar& s) {
        if (s.is_zero()) return;
        for (const auto& [k, c] : o.terms_) add_term(k, c * s);
    }

    void add_scaled(const IndexCombination& o, const Rational& s) { add_scaled(o, PolyScalar::constant(s)); }

    IndexCombination scaled(const PolyScalar& s) const {
        IndexCombination u;
        u.add_scaled(*this, s);
        return u;
    }

    IndexCombination scaled(const Rational& s) const { return scaled(PolyScalar::constant(s)); }

    // Coefficient of [empty]; the counit of the Hopf algebra.
    PolyScalar counit() const { return coefficient(Index{}); }

    // Applies a variable substitution to every coefficient.
    IndexCombination substituted(const std::array<std::optional<PolyScalar>, 4>& repl) const {
        IndexCombination u;
        for (const auto& [k, c] : terms_) u.add_term(k, c.substitute(repl));
        return u;
    }

    // Restriction to one (A, B)-monomial, as a combination with the A, B
    // exponents stripped.
    IndexCombination coefficient_of_AB(int r, int s) const {
        IndexCombination u;
        for (const auto& [k, c] : terms_) {
            PolyScalar part;
            for (const auto& [m, v] : c.terms()) {
                if (m[2] == r && m[3] == s) part.add_term(Monomial{m[0], m[1], 0, 0}, v);
            }
            u.add_term(k, part);
        }
        return u;
    }

    bool operator==(const IndexCombination&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string cs;
            bool negated = false;
            if (c.is_constant()) {
                Rational v = c.constant_value();
                if (v < 0) { negated = true; v = -v; }
                if (v != 1) cs = rational_str_short(v);
            } else {
                cs = "(" + c.str() + ")";
            }
            if (first) {
                if (negated) s += "-";
            } else {
                s += negated ? "-" : "+";
            }
            first = false;
            if (!cs.empty()) s += cs;
            s += "[" + k.str() + "]";
        }
        return s;
    }

private:
    std::map<Index, PolyScalar> terms_;
};

namespace detail {

// Products of two single indices have nonnegative integer coefficients;
// they are memoized in this compact form.
using FlatCombination = std::vector<std::pair<Index, long long>>;

inline FlatCombination flat_append(const FlatCombination& u, int a) {
    FlatCombination r;
    r.reserve(u.size());
    for (const auto& [k, c] : u) r.emplace_back(k.append(a), c);
    return r;
}

inline void flat_merge(std::map<Index, long long>& acc, const FlatCombination& u) {
    for (const auto& [k, c] : u) {
        auto [it, inserted] = acc.emplace(k, c);
        if (!inserted) it->second += c;
    }
}

inline const FlatCombination& harmonic_product_flat(const Index& u, const Index& v) {
    thread_local std::map<std::pair<Index, Index>, FlatCombination> cache;
    const Index& a = u <= v ? u : v;
    const Index& b = u <= v ? v : u;
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    FlatCombination result;
    if (a.empty()) {
        result.emplace_back(b, 1);
    } else {
        Index ap = a.prefix(a.depth() - 1);
        Index bp = b.prefix(b.depth() - 1);
        int la = a.last(), lb = b.last();
        std::map<Index, long long> acc;
        flat_merge(acc, flat_append(harmonic_product_flat(a, bp), lb));
        flat_merge(acc, flat_append(harmonic_product_flat(ap, b), la));
        flat_merge(acc, flat_append(harmonic_product_flat(ap, bp), la + lb));
        result.assign(acc.begin(), acc.end());
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace detail

// Bilinear extension of the quasi-shuffle recursion
// [k,a]*[l,b] = [[k,a]*[l],b] + [[k]*[l,b],a] + [[k]*[l],a+b].
inline IndexCombination harmonic_product(const IndexCombination& u, const IndexCombination& v) {
    IndexCombination result;
    for (const auto& [ku, cu] : u.terms()) {
        for (const auto& [kv, cv] : v.terms()) {
            PolyScalar c = cu * cv;
            if (c.is_zero()) continue;
            for (const auto& [k, n] : detail::harmonic_product_flat(ku, kv))
                result.add_term(k, c.scaled(Rational(n)));
        }
    }
    return result;
}

// The harmonic product is the ring multiplication of the index algebra.
inline IndexCombination operator*(const IndexCombination& u, const IndexCombination& v) {
    return harmonic_product(u, v);
}

// Sum over all ways of replacing each internal separator by "+" or ",".
inline IndexCombination star_expand(const Index& k) {
    thread_local std::map<Index, IndexCombination> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    IndexCombination result;
    int s = k.depth();
    if (s == 0) {
        result = IndexCombination::unit();
    } else {
        const auto& parts = k.parts();
        for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
            std::vector<int> merged;
            int run = parts[0];
            for (int i = 1; i < s; ++i) {
                if (mask & (1u << (i - 1))) {
                    run += parts[i];  // "+": merge into the running component
                } else {
                    merged.push_back(run);
                    run = parts[i];
                }
            }
            merged.push_back(run);
            result.add_term(Index(std::move(merged)), PolyScalar::one());
        }
    }
    cache.emplace(k, result);
    return result;
}

inline IndexCombination star_expand(const IndexCombination& u) {
    IndexCombination result;
    for (const auto& [k, c] : u.terms()) result.add_scaled(star_expand(k), c);
    return result;
}

// S([k]) = (-1)^depth [reversed(k)]^*, extended linearly.
inline IndexCombination antipode_S(const IndexCombination& u) {
    IndexCombination result;
    for (const auto& [k, c] : u.terms()) {
        IndexCombination star = star_expand(k.reversed());
        result.add_scaled(star, k.depth() % 2 == 0 ? c : -c);
    }
    return result;
}

// The reversal-free variant: S~([k]) = (-1)^depth [k]^*.
inline IndexCombination antipode_tilde(const IndexCombination& u) {
    IndexCombination result;
    for (const auto& [k, c] : u.terms()) {
        IndexCombination star = star_expand(k);
        result.add_scaled(star, k.depth() % 2 == 0 ? c : -c);
    }
    return result;
}

// sum_{i=0}^{r} (-1)^(r-i) [k_i] * [reversed(k^i)]^*; the unit for the empty
// index and zero otherwise.
inline IndexCombination telescoping_sum(const Index& k) {
    IndexCombination result;
    int r = k.depth();
    for (int i = 0; i <= r; ++i) {
        IndexCombination term = harmonic_product(IndexCombination::single(k.prefix(i)),
                                                 star_expand(k.suffix(i).reversed()));
        if ((r - i) % 2 == 0)
            result += term;
        else
            result -= term;
    }
    return result;
}

// [k]_{x,y} = sum_i [k_i] * [reversed(k^i)] x^{|k_i|} y^{|k^i|}.
inline IndexCombination poly_lift_xy(const Index& k) {
    thread_local std::map<Index, IndexCombination> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    IndexCombination result;
    int r = k.depth();
    for (int i = 0; i <= r; ++i) {
        Index head = k.prefix(i);
        Index tail = k.suffix(i);
        IndexCombination prod = harmonic_product(IndexCombination::single(head),
                                                 IndexCombination::single(tail.reversed()));
        result.add_scaled(prod, PolyScalar::monomial_xy(head.weight(), tail.weight()));
    }
    cache.emplace(k, result);
    return result;
}

// Star version, with the star expansion applied to both factors.
inline IndexCombination poly_lift_xy_star(const Index& k) {
    thread_local std::map<Index, IndexCombination> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    IndexCombination result;
    int r = k.depth();
    for (int i = 0; i <= r; ++i) {
        Index head = k.prefix(i);
        Index tail = k.suffix(i);
        IndexCombination prod = harmonic_product(star_expand(head), star_expand(tail.reversed()));
        result.add_scaled(prod, PolyScalar::monomial_xy(head.weight(), tail.weight()));
    }
    cache.emplace(k, result);
    return result;
}

inline IndexCombination poly_lift_xy(const IndexCombination& u) {
    IndexCombination result;
    for (const auto& [k, c] : u.terms()) result.add_scaled(poly_lift_xy(k), c);
    return result;
}

inline IndexCombination poly_lift_xy_star(const IndexCombination& u) {
    IndexCombination result;
    for (const auto& [k, c] : u.terms()) result.add_scaled(poly_lift_xy_star(k), c);
    return result;
}

// Finite tensor combinations, used for the coproduct and the Hopf axioms.
class TensorCombination {
public:
    TensorCombination() = default;

    void add_term(const Index& a, const Index& b, const PolyScalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto [it, inserted] = terms_.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorCombination& operator+=(const TensorCombination& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }

    const std::map<std::pair<Index, Index>, PolyScalar>& terms() const& { return terms_; }
    const std::map<std::pair<Index, Index>, PolyScalar>& terms() const&& = delete;

    bool operator==(const TensorCombination&) const = default;

    // Componentwise harmonic product (a (x) b)(c (x) d) = (a*c) (x) (b*d).
    friend TensorCombination tensor_product(const TensorCombination& u, const TensorCombination& v) {
        TensorCombination result;
        for (const auto& [ku, cu] : u.terms_) {
            for (const auto& [kv, cv] : v.terms_) {
                PolyScalar c = cu * cv;
                if (c.is_zero()) continue;
                for (const auto& [a, na] : detail::harmonic_product_flat(ku.first, kv.first))
                    for (const auto& [b, nb] : detail::harmonic_product_flat(ku.second, kv.second))
                        result.add_term(a, b, c.scaled(Rational(na) * nb));
            }
        }
        return result;
    }

private:
    std::map<std::pair<Index, Index>, PolyScalar> terms_;
};

// Deconcatenation coproduct: [k] -> sum_i [k_i] (x) [k^i], extended linearly.
inline TensorCombination comultiply(const IndexCombination& u) {
    TensorCombination result;
    for (const auto& [k, c] : u.terms()) {
        for (int i = 0; i <= k.depth(); ++i) result.add_term(k.prefix(i), k.suffix(i), c);
    }
    return result;
}

}  // namespace mzv
