#pragma once

#include "mzv/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace mzv {

// The four formal variables that ever appear as scalars.
enum class Var : int { x = 0, y = 1, A = 2, B = 3 };

inline const char* var_name(Var v) {
    static constexpr const char* names[4] = {"x", "y", "A", "B"};
    return names[static_cast<int>(v)];
}

using Monomial = std::array<uint16_t, 4>;  // exponents of x, y, A, B

// Sparse multivariate polynomial in x, y, A, B over exact rationals.
// Zero coefficients are never stored, so map equality is polynomial equality.
class PolyScalar {
public:
    PolyScalar() = default;

    static PolyScalar constant(Rational c) {
        PolyScalar p;
        if (c != 0) p.terms_.emplace(Monomial{0, 0, 0, 0}, std::move(c));
        return p;
    }

    static PolyScalar one() { return constant(1); }

    static PolyScalar variable(Var v, int exp = 1, Rational coeff = 1) {
        if (exp < 0) throw std::invalid_argument("negative exponent");
        PolyScalar p;
        if (coeff != 0) {
            Monomial m{0, 0, 0, 0};
            m[static_cast<size_t>(v)] = static_cast<uint16_t>(exp);
            p.terms_.emplace(m, std::move(coeff));
        }
        return p;
    }

    static PolyScalar monomial_xy(int i, int j, Rational coeff = 1) {
        PolyScalar p;
        if (coeff != 0) p.terms_.emplace(Monomial{static_cast<uint16_t>(i), static_cast<uint16_t>(j), 0, 0}, std::move(coeff));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0, 0});
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("constant_value() of non-constant polynomial");
        return terms_.begin()->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    bool uses_var(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m[static_cast<size_t>(v)] != 0) return true;
        return false;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PolyScalar& operator+=(const PolyScalar& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    PolyScalar& operator-=(const PolyScalar& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }

    PolyScalar operator-() const {
        PolyScalar p;
        for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
        return p;
    }

    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
        PolyScalar p;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m{static_cast<uint16_t>(ma[0] + mb[0]), static_cast<uint16_t>(ma[1] + mb[1]),
                           static_cast<uint16_t>(ma[2] + mb[2]), static_cast<uint16_t>(ma[3] + mb[3])};
                p.add_term(m, ca * cb);
            }
        }
        return p;
    }

    PolyScalar& operator*=(const PolyScalar& o) { return *this = *this * o; }

    PolyScalar scaled(const Rational& c) const {
        PolyScalar p;
        if (c == 0) return p;
        for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
        return p;
    }

    PolyScalar pow(unsigned e) const {
        PolyScalar result = one();
        PolyScalar base = *this;
        while (e != 0) {
            if (e & 1u) result *= base;
            if (e >>= 1) base *= base;
        }
        return result;
    }

    // Replaces each listed variable by the given polynomial; unlisted
    // variables stay themselves.
    PolyScalar substitute(const std::array<std::optional<PolyScalar>, 4>& repl) const {
        PolyScalar result;
        for (const auto& [m, c] : terms_) {
            PolyScalar term = constant(c);
            for (size_t v = 0; v < 4; ++v) {
                if (m[v] == 0) continue;
                if (repl[v])
                    term *= repl[v]->pow(m[v]);
                else
                    term *= variable(static_cast<Var>(v), m[v]);
            }
            result += term;
        }
        return result;
    }

    // Full evaluation; every variable that occurs must have a value.
    Rational evaluate(const std::array<std::optional<Rational>, 4>& values) const {
        Rational result(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (size_t v = 0; v < 4; ++v) {
                if (m[v] == 0) continue;
                if (!values[v])
                    throw std::invalid_argument(std::string("no sample value for variable ") + var_name(static_cast<Var>(v)));
                term *= rational_pow(*values[v], m[v]);
            }
            result += term;
        }
        return result;
    }

    const std::map<Monomial, Rational>& terms() const& { return terms_; }
    const std::map<Monomial, Rational>& terms() const&& = delete;

    bool operator==(const PolyScalar&) const = default;

    // Compact monomial key, e.g. "x2y0A1B0".
    static std::string monomial_key(const Monomial& m) {
        std::string s;
        for (size_t v = 0; v < 4; ++v) {
            s += var_name(static_cast<Var>(v));
            s += std::to_string(m[v]);
        }
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string vars;
            for (size_t v = 0; v < 4; ++v) {
                if (m[v] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += var_name(static_cast<Var>(v));
                if (m[v] > 1) vars += "^" + std::to_string(m[v]);
            }
            if (vars.empty()) {
                s += rational_str_short(a);
            } else {
                if (a != 1) s += rational_str_short(a) + "*";
                s += vars;
            }
        }
        return s;
    }

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace mzv
