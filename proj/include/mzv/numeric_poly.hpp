#pragma once

#include "mzv/combination.hpp"
#include "mzv/mzv_eval.hpp"
#include "mzv/regularized.hpp"
#include "mzv/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace mzv {

// Real-coefficient polynomial in the regularization variable T.  T is never
// sampled, so degree mismatches surface structurally in comparisons.
class NumericPoly {
public:
    NumericPoly() = default;
    explicit NumericPoly(Real constant) { if (constant != 0.0L) coeffs_.push_back(constant); }

    static NumericPoly T(int degree = 1, Real coeff = 1.0L) {
        NumericPoly p;
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, 0.0L);
        p.coeffs_.back() = coeff;
        return p;
    }

    void add_term(int degree, Real c) {
        if (static_cast<size_t>(degree) >= coeffs_.size()) coeffs_.resize(static_cast<size_t>(degree) + 1, 0.0L);
        coeffs_[static_cast<size_t>(degree)] += c;
    }

    Real coeff(int degree) const {
        return static_cast<size_t>(degree) < coeffs_.size() ? coeffs_[static_cast<size_t>(degree)] : 0.0L;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    NumericPoly& operator+=(const NumericPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0L);
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    friend NumericPoly operator+(NumericPoly a, const NumericPoly& b) { return a += b; }

    friend NumericPoly operator-(const NumericPoly& a, const NumericPoly& b) {
        NumericPoly r = a;
        if (b.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size(), 0.0L);
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }

    friend NumericPoly operator*(const NumericPoly& a, const NumericPoly& b) {
        NumericPoly r;
        if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0L);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0.0L) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    NumericPoly scaled(Real s) const {
        NumericPoly r = *this;
        for (Real& c : r.coeffs_) c *= s;
        return r;
    }

    Real max_abs() const {
        Real m = 0.0L;
        for (Real c : coeffs_) m = std::max(m, std::fabs(c));
        return m;
    }

    // Largest |coefficient| at T-degree >= 1; zero for a T-free value.
    Real max_abs_t_part() const {
        Real m = 0.0L;
        for (size_t i = 1; i < coeffs_.size(); ++i) m = std::max(m, std::fabs(coeffs_[i]));
        return m;
    }

    friend Real max_abs_difference(const NumericPoly& a, const NumericPoly& b) { return (a - b).max_abs(); }

    bool operator==(const NumericPoly& o) const {
        size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        for (size_t i = 0; i < n; ++i)
            if (coeff(static_cast<int>(i)) != o.coeff(static_cast<int>(i))) return false;
        return true;
    }

    std::string str(int significant_digits = 12) const {
        std::string s;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0.0L && coeffs_.size() > 1) continue;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*Lg", significant_digits, coeffs_[i]);
            if (!s.empty()) s += " + ";
            s += buf;
            if (i == 1) s += "*T";
            if (i > 1) s += "*T^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    std::vector<Real> coeffs_;
};

template <>
struct RingTraits<NumericPoly> {
    static NumericPoly zero() { return {}; }
    static NumericPoly one() { return NumericPoly(1.0L); }
    static bool is_zero(const NumericPoly& p) { return p.degree() < 0 || p.max_abs() == 0.0L; }
    static NumericPoly scale(const NumericPoly& p, const Rational& q) { return p.scaled(to_long_double(q)); }
    static std::optional<NumericPoly> try_invert(const NumericPoly& p) {
        // Invertible only as a T-free nonzero constant.
        if (p.coeff(0) == 0.0L || p.max_abs_t_part() != 0.0L) return std::nullopt;
        return NumericPoly(1.0L / p.coeff(0));
    }
};

// Sample values for the formal variables; variables without a value must not
// occur in the combination being evaluated.
struct SampleSpec {
    std::array<std::optional<Rational>, 4> values{};

    SampleSpec() = default;

    static SampleSpec xyAB(std::optional<Rational> x, std::optional<Rational> y, std::optional<Rational> A,
                           std::optional<Rational> B) {
        SampleSpec s;
        s.values = {std::move(x), std::move(y), std::move(A), std::move(B)};
        return s;
    }

    std::string str() const {
        std::string s = "(";
        bool first = true;
        for (size_t v = 0; v < 4; ++v) {
            if (!values[v]) continue;
            if (!first) s += ",";
            first = false;
            s += std::string(var_name(static_cast<Var>(v))) + "=" + rational_str_short(*values[v]);
        }
        return s + ")";
    }
};

// The evaluation map: specialize coefficient variables at the sample,
// regularize every index and evaluate the admissible parts numerically.
// T stays symbolic in the result.
inline NumericPoly eval_Z(const IndexCombination& u, const SampleSpec& sample, Real mzv_tol = 1e-10L) {
    NumericPoly result;
    for (const auto& [k, poly] : u.terms()) {
        Rational c = poly.evaluate(sample.values);
        if (c == 0) continue;
        Real cf = to_long_double(c);
        for (const auto& [key, q] : regularize(k).terms()) {
            const auto& [t_degree, adm] = key;
            result.add_term(t_degree, cf * to_long_double(q) * eval_admissible(adm, mzv_tol));
        }
    }
    return result;
}

inline NumericPoly eval_Z(const IndexCombination& u, Real mzv_tol = 1e-10L) {
    return eval_Z(u, SampleSpec{}, mzv_tol);
}

// Z_{x,y} and Z_S as compositions with the polynomial lift.
inline NumericPoly eval_Z_xy(const Index& k, const Rational& x, const Rational& y, bool star = false,
                             Real mzv_tol = 1e-10L) {
    SampleSpec s = SampleSpec::xyAB(x, y, std::nullopt, std::nullopt);
    return eval_Z(star ? poly_lift_xy_star(k) : poly_lift_xy(k), s, mzv_tol);
}

inline NumericPoly eval_Z_symmetric(const Index& k, bool star = false, Real mzv_tol = 1e-10L) {
    return eval_Z_xy(k, Rational(1), Rational(-1), star, mzv_tol);
}

}  // namespace mzv
