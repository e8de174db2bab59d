#pragma once

#include "mzv/combination.hpp"
#include "mzv/poly_scalar.hpp"
#include "mzv/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace mzv {

// Coefficient-ring glue for TruncatedSeries.  A ring supplies zero, one,
// +, -, *, scaling by exact rationals and inversion of units.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return r == 0; }
    static Rational scale(const Rational& r, const Rational& q) { return r * q; }
    static std::optional<Rational> try_invert(const Rational& r) {
        if (r == 0) return std::nullopt;
        return Rational(1) / r;
    }
};

template <>
struct RingTraits<PolyScalar> {
    static PolyScalar zero() { return {}; }
    static PolyScalar one() { return PolyScalar::one(); }
    static bool is_zero(const PolyScalar& p) { return p.is_zero(); }
    static PolyScalar scale(const PolyScalar& p, const Rational& q) { return p.scaled(q); }
    static std::optional<PolyScalar> try_invert(const PolyScalar& p) {
        if (!p.is_constant() || p.is_zero()) return std::nullopt;
        return PolyScalar::constant(Rational(1) / p.constant_value());
    }
};

template <>
struct RingTraits<IndexCombination> {
    static IndexCombination zero() { return {}; }
    static IndexCombination one() { return IndexCombination::unit(); }
    static bool is_zero(const IndexCombination& u) { return u.is_zero(); }
    static IndexCombination scale(const IndexCombination& u, const Rational& q) { return u.scaled(q); }
    // Units are nonzero rational multiples of [empty].
    static std::optional<IndexCombination> try_invert(const IndexCombination& u) {
        if (u.size() != 1) return std::nullopt;
        const auto& [k, c] = *u.terms().begin();
        if (!k.empty() || !c.is_constant()) return std::nullopt;
        return IndexCombination::single(Index{}, PolyScalar::constant(Rational(1) / c.constant_value()));
    }
};

// Power series in one variable W over a commutative coefficient ring,
// truncated at a fixed order N (coefficients of W^0 .. W^N).
template <class R>
class TruncatedSeries {
public:
    using Traits = RingTraits<R>;

    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, Traits::zero()) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }

    static TruncatedSeries one(int order) {
        TruncatedSeries f(order);
        f.coeffs_[0] = Traits::one();
        return f;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    void set_coeff(int n, R value) { coeffs_.at(static_cast<size_t>(n)) = std::move(value); }
    void add_coeff(int n, const R& value) { coeffs_.at(static_cast<size_t>(n)) = coeffs_[static_cast<size_t>(n)] + value; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same_order(b);
        TruncatedSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same_order(b);
        TruncatedSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(order());
        for (int n = 0; n <= order(); ++n) r.coeffs_[n] = Traits::scale(coeffs_[n], Rational(-1));
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same_order(b);
        TruncatedSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (Traits::is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (Traits::is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    // Multiplicative inverse; the constant term must be a unit of R.
    TruncatedSeries inverse() const {
        auto c0 = Traits::try_invert(coeffs_[0]);
        if (!c0) throw std::domain_error("series inverse needs an invertible constant term");
        TruncatedSeries g(order());
        g.coeffs_[0] = *c0;
        for (int n = 1; n <= order(); ++n) {
            R acc = Traits::zero();
            for (int j = 1; j <= n; ++j) acc = acc + coeffs_[j] * g.coeffs_[n - j];
            g.coeffs_[n] = Traits::scale(*c0 * acc, Rational(-1));
        }
        return g;
    }

    // exp of a series with zero constant term, via g' = f' g.
    TruncatedSeries exp() const {
        if (!Traits::is_zero(coeffs_[0])) throw std::domain_error("series exp needs zero constant term");
        TruncatedSeries g(order());
        g.coeffs_[0] = Traits::one();
        for (int n = 1; n <= order(); ++n) {
            R acc = Traits::zero();
            for (int j = 1; j <= n; ++j) acc = acc + Traits::scale(coeffs_[j], Rational(j)) * g.coeffs_[n - j];
            g.coeffs_[n] = Traits::scale(acc, Rational(1, n));
        }
        return g;
    }

    // log of a series with constant term one, via (log f)' = f' / f.
    TruncatedSeries log() const {
        if (!(coeffs_[0] == Traits::one())) throw std::domain_error("series log needs constant term one");
        TruncatedSeries h = inverse();
        TruncatedSeries g(order());
        for (int n = 1; n <= order(); ++n) {
            R acc = Traits::zero();
            for (int j = 1; j <= n; ++j) acc = acc + Traits::scale(coeffs_[j], Rational(j)) * h.coeffs_[n - j];
            g.coeffs_[n] = Traits::scale(acc, Rational(1, n));
        }
        return g;
    }

    // W -> c W: multiplies the W^n coefficient by c^n.
    TruncatedSeries scale_variable(const R& c) const {
        TruncatedSeries r(order());
        R p = Traits::one();
        for (int n = 0; n <= order(); ++n) {
            r.coeffs_[n] = coeffs_[n] * p;
            if (n < order()) p = p * c;
        }
        return r;
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    void check_same_order(const TruncatedSeries& other) const {
        if (coeffs_.size() != other.coeffs_.size()) throw std::invalid_argument("series order mismatch");
    }

    std::vector<R> coeffs_;
};

// z/sin(z) as an exact rational series in z (odd coefficients vanish),
// obtained by inverting sin(z)/z.
inline TruncatedSeries<Rational> z_over_sin_z_exact(int order) {
    TruncatedSeries<Rational> sinc(order);
    Rational factorial(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) factorial *= n;
        if (n % 2 == 0) {
            Rational c = Rational(1) / (factorial * (n + 1));  // 1/(n+1)!
            sinc.set_coeff(n, (n / 2) % 2 == 0 ? c : -c);
        }
    }
    return sinc.inverse();
}

}  // namespace mzv
