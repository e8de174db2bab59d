#pragma once

#include "mzv/combination.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace mzv {

// The anti-hook symbol with a vertical row k_row, a horizontal row l_row and
// a corner entry.  Numeric evaluation of the corresponding Schur value needs
// corner >= 2; the symbolic expansion is defined for corner >= 1.
struct AntiHook {
    Index k_row;
    Index l_row;
    int corner = 1;

    AntiHook(Index k, Index l, int a) : k_row(std::move(k)), l_row(std::move(l)), corner(a) {
        if (corner < 1) throw std::invalid_argument("anti-hook corner must be positive");
    }

    int weight() const { return k_row.weight() + corner + l_row.weight(); }

    auto operator<=>(const AntiHook&) const = default;
};

// Expansion by the defining recursion: with an empty horizontal row the
// symbol is [k_row, corner]; otherwise peel the last entry of l_row via
//   [K; L_{s-1}; l_s] = [K]*[L]^* - [K_{r-1}; L; k_r]   applied with K = (k_row, corner).
inline IndexCombination expand_antihook(const AntiHook& h) {
    thread_local std::map<AntiHook, IndexCombination> cache;
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;

    IndexCombination result;
    if (h.l_row.empty()) {
        result = IndexCombination::single(h.k_row.append(h.corner));
    } else {
        Index top = h.k_row.append(h.corner);
        result = harmonic_product(IndexCombination::single(top), star_expand(h.l_row));
        result -= expand_antihook(AntiHook(top, h.l_row.prefix(h.l_row.depth() - 1), h.l_row.last()));
    }
    cache.emplace(h, result);
    return result;
}

// Independent closed form: sum_{j=0}^{s} (-1)^j [k,a,m_j] * [reversed(m^j)]^*
// with m = reversed(l_row).
inline IndexCombination expand_antihook_closed(const AntiHook& h) {
    IndexCombination result;
    Index m = h.l_row.reversed();
    int s = m.depth();
    for (int j = 0; j <= s; ++j) {
        IndexCombination term = harmonic_product(
            IndexCombination::single(concat3(h.k_row, h.corner, m.prefix(j))),
            star_expand(m.suffix(j).reversed()));
        if (j % 2 == 0)
            result += term;
        else
            result -= term;
    }
    return result;
}

// The defining two-term relation for nonempty rows:
// [K_{r-1}; L; k_r] + [K; L_{s-1}; l_s] = [K] * [L]^*.
inline bool compatibility_check(const Index& K, const Index& L) {
    if (K.empty() || L.empty()) throw std::invalid_argument("compatibility_check needs nonempty rows");
    IndexCombination lhs = expand_antihook(AntiHook(K.prefix(K.depth() - 1), L, K.last()));
    lhs += expand_antihook(AntiHook(K, L.prefix(L.depth() - 1), L.last()));
    IndexCombination rhs = harmonic_product(IndexCombination::single(K), star_expand(L));
    return lhs == rhs;
}

// S~ of an anti-hook expansion; equals (-1)^(r+s+1) times the expansion with
// the rows swapped.
inline IndexCombination antihook_antipode(const AntiHook& h) {
    return antipode_tilde(expand_antihook(h));
}

inline bool antihook_antipode_check(const AntiHook& h) {
    IndexCombination lhs = antihook_antipode(h);
    IndexCombination rhs = expand_antihook(AntiHook(h.l_row, h.k_row, h.corner));
    int sign = (h.k_row.depth() + h.l_row.depth() + 1) % 2 == 0 ? 1 : -1;
    return lhs == rhs.scaled(Rational(sign));
}

enum class LemmaName { alternating2, alternating3, key, key_star };

inline LemmaName parse_lemma_name(const std::string& name) {
    if (name == "alternating2") return LemmaName::alternating2;
    if (name == "alternating3") return LemmaName::alternating3;
    if (name == "key") return LemmaName::key;
    if (name == "key_star") return LemmaName::key_star;
    throw std::invalid_argument("unknown lemma name: " + name);
}

inline const char* lemma_name_str(LemmaName n) {
    switch (n) {
        case LemmaName::alternating2: return "alternating2";
        case LemmaName::alternating3: return "alternating3";
        case LemmaName::key: return "key";
        case LemmaName::key_star: return "key_star";
    }
    return "?";
}

// Both sides of the named identity, fully expanded.  The key variants carry
// x, y in their coefficients; the others are plain rational combinations.
inline std::pair<IndexCombination, IndexCombination> lemma_sides(LemmaName name, const Index& k, int a,
                                                                 const Index& l) {
    int r = k.depth();
    int s = l.depth();
    auto sign = [](int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };

    switch (name) {
        case LemmaName::alternating2: {
            IndexCombination lhs;
            for (int j = 0; j <= s; ++j) {
                IndexCombination term = harmonic_product(IndexCombination::single(concat3(k, a, l.prefix(j))),
                                                         star_expand(l.suffix(j).reversed()));
                lhs += term.scaled(sign(j));
            }
            IndexCombination rhs = expand_antihook(AntiHook(k, l.reversed(), a));
            return {lhs, rhs};
        }
        case LemmaName::alternating3: {
            IndexCombination lhs;
            for (int j = 0; j <= s; ++j) {
                IndexCombination term = harmonic_product(expand_antihook(AntiHook(k, l.prefix(j).reversed(), a)),
                                                         IndexCombination::single(l.suffix(j)));
                lhs += term.scaled(sign(j));
            }
            IndexCombination rhs = IndexCombination::single(concat3(k, a, l));
            return {lhs, rhs};
        }
        case LemmaName::key: {
            IndexCombination lhs = poly_lift_xy(concat3(k, a, l));
            IndexCombination rhs;
            for (int i = 0; i <= r; ++i) {
                Index tail = k.suffix(i);
                IndexCombination hook = expand_antihook(AntiHook(l.reversed(), tail, a));
                PolyScalar scale = PolyScalar::variable(Var::y, tail.weight() + a + l.weight(), sign(r - i));
                rhs += harmonic_product(hook.scaled(scale), poly_lift_xy(k.prefix(i)));
            }
            for (int j = 0; j <= s; ++j) {
                IndexCombination hook = expand_antihook(AntiHook(k, l.prefix(j).reversed(), a));
                PolyScalar scale = PolyScalar::variable(Var::x, k.weight() + a + l.prefix(j).weight(), sign(j));
                rhs += harmonic_product(hook.scaled(scale), poly_lift_xy(l.suffix(j)));
            }
            return {lhs, rhs};
        }
        case LemmaName::key_star: {
            IndexCombination lhs = poly_lift_xy_star(concat3(k, a, l));
            IndexCombination rhs;
            for (int i = 0; i <= r; ++i) {
                Index tail = k.suffix(i);
                IndexCombination hook = expand_antihook(AntiHook(tail, l.reversed(), a));
                PolyScalar scale = PolyScalar::variable(Var::y, tail.weight() + a + l.weight(), sign(r - i));
                rhs += harmonic_product(hook.scaled(scale), poly_lift_xy_star(k.prefix(i)));
            }
            for (int j = 0; j <= s; ++j) {
                IndexCombination hook = expand_antihook(AntiHook(l.prefix(j).reversed(), k, a));
                PolyScalar scale = PolyScalar::variable(Var::x, k.weight() + a + l.prefix(j).weight(), sign(j));
                rhs += harmonic_product(hook.scaled(scale), poly_lift_xy_star(l.suffix(j)));
            }
            return {lhs, rhs};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace mzv
