#pragma once

#include "mzv/antihook.hpp"
#include "mzv/genfunc.hpp"
#include "mzv/numeric_poly.hpp"

#include <chrono>
#include <numbers>
#include <string>
#include <vector>

namespace mzv {

using SeriesNP = TruncatedSeries<NumericPoly>;

inline Real zeta_value(int w, Real mzv_tol = 1e-10L) { return eval_admissible(Index{w}, mzv_tol); }

// (u^n - v^n)/(u - v) as the divided power sum, valid also when u = v.
inline Rational difference_quotient(const Rational& u, const Rational& v, int n) {
    Rational sum(0);
    for (int j = 0; j < n; ++j) sum += rational_pow(u, j) * rational_pow(v, n - 1 - j);
    return sum;
}

// sum_{w>=2} zeta(w) (u^(w-1) - v^(w-1))/(u - v) W^w, the shape every
// sum-formula prefactor W/(u-v) (psi_1(uW) - psi_1(vW)) reduces to.
inline SeriesNP prefactor_series(int N, const Rational& u, const Rational& v, Real mzv_tol = 1e-10L) {
    SeriesNP f(N);
    for (int w = 2; w <= N; ++w)
        f.set_coeff(w, NumericPoly(zeta_value(w, mzv_tol) * to_long_double(difference_quotient(u, v, w - 1))));
    return f;
}

// Gamma_1(cW) = exp(c T W + sum_{k>=2} zeta(k) c^k / k W^k), T symbolic.
inline SeriesNP gamma1_numeric(int N, const Rational& c, Real mzv_tol = 1e-10L) {
    SeriesNP gen(N);
    if (N >= 1) gen.set_coeff(1, NumericPoly::T(1, to_long_double(c)));
    for (int k = 2; k <= N; ++k)
        gen.set_coeff(k, NumericPoly(zeta_value(k, mzv_tol) * to_long_double(rational_pow(c, k)) / k));
    return gen.exp();
}

// sin(pi c W) / (pi c W) as a series in W.
inline SeriesNP sin_over_z_numeric(int N, const Rational& c) {
    SeriesNP f(N);
    Real z = std::numbers::pi_v<Real> * to_long_double(c);
    Real zpow = 1.0L;
    Real factorial = 1.0L;  // (2m+1)!
    for (int m = 0; 2 * m <= N; ++m) {
        if (m > 0) {
            zpow *= z * z;
            factorial *= (2 * m) * (2 * m + 1);
        }
        f.set_coeff(2 * m, NumericPoly((m % 2 == 0 ? 1.0L : -1.0L) * zpow / factorial));
    }
    return f;
}

// pi c W / sin(pi c W), from the exact rational coefficients of z/sin z.
inline SeriesNP z_over_sin_numeric(int N, const Rational& c) {
    TruncatedSeries<Rational> exact = z_over_sin_z_exact(N);
    SeriesNP f(N);
    Real z = std::numbers::pi_v<Real> * to_long_double(c);
    Real zpow = 1.0L;
    for (int n = 0; n <= N; ++n) {
        f.set_coeff(n, NumericPoly(to_long_double(exact.coeff(n)) * zpow));
        zpow *= z;
    }
    return f;
}

inline Real max_series_difference(const SeriesNP& a, const SeriesNP& b) {
    Real m = 0.0L;
    for (int n = 0; n <= a.order(); ++n) m = std::max(m, max_abs_difference(a.coeff(n), b.coeff(n)));
    return m;
}

// ---- identity catalogue ------------------------------------------------------

enum class NumericIdentity {
    psi_sum_ka,
    zeta_kal,
    zeta_S_kal,
    gen_func_zeta,
    gen_func_zeta_xy,
    gen_func_zeta_S,
    gamma_reflection,
    main_theorem,
    main_theorem_star,
    sum_schur_gen,
    relation_sum_formulas,
};

inline const char* numeric_identity_str(NumericIdentity id) {
    switch (id) {
        case NumericIdentity::psi_sum_ka: return "psi_sum_ka";
        case NumericIdentity::zeta_kal: return "zeta_kal";
        case NumericIdentity::zeta_S_kal: return "zeta_S_kal";
        case NumericIdentity::gen_func_zeta: return "gen_func_zeta";
        case NumericIdentity::gen_func_zeta_xy: return "gen_func_zeta_xy";
        case NumericIdentity::gen_func_zeta_S: return "gen_func_zeta_S";
        case NumericIdentity::gamma_reflection: return "gamma_reflection";
        case NumericIdentity::main_theorem: return "main_theorem";
        case NumericIdentity::main_theorem_star: return "main_theorem_star";
        case NumericIdentity::sum_schur_gen: return "sum_schur_gen";
        case NumericIdentity::relation_sum_formulas: return "relation_sum_formulas";
    }
    return "?";
}

inline NumericIdentity parse_numeric_identity(const std::string& name) {
    for (NumericIdentity id :
         {NumericIdentity::psi_sum_ka, NumericIdentity::zeta_kal, NumericIdentity::zeta_S_kal,
          NumericIdentity::gen_func_zeta, NumericIdentity::gen_func_zeta_xy, NumericIdentity::gen_func_zeta_S,
          NumericIdentity::gamma_reflection, NumericIdentity::main_theorem, NumericIdentity::main_theorem_star,
          NumericIdentity::sum_schur_gen, NumericIdentity::relation_sum_formulas})
        if (name == numeric_identity_str(id)) return id;
    throw std::invalid_argument("unknown numeric identity: " + name);
}

// Which of x, y, A, B the named identity actually samples.
inline std::array<bool, 4> numeric_identity_vars(NumericIdentity id) {
    switch (id) {
        case NumericIdentity::psi_sum_ka:
        case NumericIdentity::gen_func_zeta:
        case NumericIdentity::gen_func_zeta_S: return {false, false, true, false};
        case NumericIdentity::gen_func_zeta_xy: return {true, true, true, false};
        case NumericIdentity::zeta_kal:
        case NumericIdentity::zeta_S_kal:
        case NumericIdentity::sum_schur_gen: return {false, false, true, true};
        case NumericIdentity::main_theorem:
        case NumericIdentity::main_theorem_star: return {true, true, true, true};
        case NumericIdentity::gamma_reflection:
        case NumericIdentity::relation_sum_formulas: return {false, false, false, false};
    }
    return {false, false, false, false};
}

// Default sampling grid: four (x, y) points crossed with three (A, B) points.
inline std::vector<SampleSpec> default_samples() {
    std::vector<std::pair<Rational, Rational>> xy = {
        {Rational(1), Rational(0)},
        {Rational(1), Rational(-1)},
        {Rational(2), Rational(3)},
        {Rational(1, 2), Rational(-1, 3)},
    };
    std::vector<std::pair<Rational, Rational>> ab = {
        {Rational(0), Rational(0)},
        {Rational(1), Rational(2)},
        {Rational(-1), Rational(1, 2)},
    };
    std::vector<SampleSpec> samples;
    for (const auto& [x, y] : xy)
        for (const auto& [a, b] : ab) samples.push_back(SampleSpec::xyAB(x, y, a, b));
    return samples;
}

// Restricts full tuples to the variables an identity uses, deduplicating
// while preserving order.
inline std::vector<SampleSpec> project_samples(const std::vector<SampleSpec>& samples, std::array<bool, 4> used) {
    std::vector<SampleSpec> projected;
    for (const SampleSpec& s : samples) {
        SampleSpec p;
        for (size_t v = 0; v < 4; ++v)
            if (used[v]) p.values[v] = s.values[v];
        bool seen = false;
        for (const SampleSpec& q : projected)
            if (q.values == p.values) { seen = true; break; }
        if (!seen) projected.push_back(p);
    }
    return projected;
}

struct NumericFailure {
    std::string sample;
    int w = 0;
    int t_degree = 0;
    Real lhs = 0;
    Real rhs = 0;
};

struct NumericReport {
    std::string identity;
    int order = 0;
    std::vector<SampleSpec> samples;
    Real tol = 0;
    Real max_abs_residual = 0;
    Real max_odd_residual = -1;  // gamma_reflection only; -1 means not applicable
    bool holds = false;
    std::optional<NumericFailure> first_failure;
    long long elapsed_ms = 0;
};

// First coefficient whose difference exceeds the tolerance, if any.
inline std::optional<NumericFailure> first_numeric_failure(const SeriesNP& lhs, const SeriesNP& rhs, Real tol) {
    for (int n = 0; n <= lhs.order(); ++n) {
        int degree = std::max(lhs.coeff(n).degree(), rhs.coeff(n).degree());
        for (int d = 0; d <= degree; ++d) {
            Real a = lhs.coeff(n).coeff(d), b = rhs.coeff(n).coeff(d);
            if (std::fabs(a - b) > tol) return NumericFailure{"", n, d, a, b};
        }
    }
    return std::nullopt;
}

namespace detail {

inline Rational sample_or(const SampleSpec& s, Var v, const Rational& fallback) {
    const auto& value = s.values[static_cast<size_t>(v)];
    return value ? *value : fallback;
}

}  // namespace detail

// Right-hand side of the main theorem at one sample point.
inline SeriesNP main_theorem_rhs(int N, const Rational& x, const Rational& y, const Rational& A, const Rational& B,
                                 bool star, Real mzv_tol = 1e-10L) {
    const Rational one(1);
    if (!star) {
        SeriesNP num = gamma1_numeric(N, x, mzv_tol) * gamma1_numeric(N, y, mzv_tol);
        SeriesNP term1 = prefactor_series(N, one - A, B - A, mzv_tol).scale_variable(NumericPoly(to_long_double(y))) *
                         num *
                         (gamma1_numeric(N, x * (one - A), mzv_tol) * gamma1_numeric(N, y * (one - A), mzv_tol)).inverse();
        SeriesNP term2 = prefactor_series(N, one - B, A - B, mzv_tol).scale_variable(NumericPoly(to_long_double(x))) *
                         num *
                         (gamma1_numeric(N, x * (one - B), mzv_tol) * gamma1_numeric(N, y * (one - B), mzv_tol)).inverse();
        return term1 + term2;
    }
    SeriesNP den_inv = (gamma1_numeric(N, x, mzv_tol) * gamma1_numeric(N, y, mzv_tol)).inverse();
    SeriesNP term1 = prefactor_series(N, one + B, B - A, mzv_tol).scale_variable(NumericPoly(to_long_double(y))) *
                     gamma1_numeric(N, x * (one + A), mzv_tol) * gamma1_numeric(N, y * (one + A), mzv_tol) * den_inv;
    SeriesNP term2 = prefactor_series(N, one + A, A - B, mzv_tol).scale_variable(NumericPoly(to_long_double(x))) *
                     gamma1_numeric(N, x * (one + B), mzv_tol) * gamma1_numeric(N, y * (one + B), mzv_tol) * den_inv;
    return term1 + term2;
}

// Both displayed identities (plain and star) of one named statement,
// evaluated at one sample point: returns {lhs, rhs} pairs.
struct SeriesPair {
    SeriesNP lhs;
    SeriesNP rhs;
    SeriesPair(SeriesNP l, SeriesNP r) : lhs(std::move(l)), rhs(std::move(r)) {}
};

inline std::vector<SeriesPair> numeric_identity_sides(NumericIdentity id, int N, const SampleSpec& s,
                                                      Real mzv_tol = 1e-10L) {
    const Rational one(1);
    Rational A = detail::sample_or(s, Var::A, Rational(0));
    Rational B = detail::sample_or(s, Var::B, Rational(0));
    Rational x = detail::sample_or(s, Var::x, Rational(1));
    Rational y = detail::sample_or(s, Var::y, Rational(0));
    auto grade = [&](int r, int sdeg) { return to_long_double(rational_pow(A, r) * rational_pow(B, sdeg)); };

    std::vector<SeriesPair> pairs;
    switch (id) {
        case NumericIdentity::psi_sum_ka: {
            SeriesNP lhs(N), lhs_star(N);
            for (int w = 2; w <= N; ++w) {
                NumericPoly acc, acc_star;
                for (int a = 2; a <= w; ++a) {
                    for (const Index& k : enumerate_indices(w - a)) {
                        Real g = grade(k.depth(), 0);
                        Index full = k.append(a);
                        acc += NumericPoly(g * eval_admissible(full, mzv_tol));
                        acc_star += eval_Z(star_expand(full), mzv_tol).scaled(g);
                    }
                }
                lhs.set_coeff(w, acc);
                lhs_star.set_coeff(w, acc_star);
            }
            pairs.emplace_back(lhs, prefactor_series(N, one, A, mzv_tol));
            pairs.emplace_back(lhs_star, prefactor_series(N, one + A, A, mzv_tol));
            break;
        }
        case NumericIdentity::gen_func_zeta: {
            SeriesNP lhs(N), lhs_star(N);
            for (int w = 0; w <= N; ++w) {
                NumericPoly acc, acc_star;
                for (const Index& k : enumerate_indices(w)) {
                    Real g = grade(k.depth(), 0);
                    acc += eval_Z(IndexCombination::single(k), mzv_tol).scaled(g);
                    acc_star += eval_Z(star_expand(k), mzv_tol).scaled(g);
                }
                lhs.set_coeff(w, acc);
                lhs_star.set_coeff(w, acc_star);
            }
            SeriesNP G = gamma1_numeric(N, one, mzv_tol);
            pairs.emplace_back(lhs, G * gamma1_numeric(N, one - A, mzv_tol).inverse());
            pairs.emplace_back(lhs_star, gamma1_numeric(N, one + A, mzv_tol) * G.inverse());
            break;
        }
        case NumericIdentity::gen_func_zeta_xy: {
            SampleSpec xy = SampleSpec::xyAB(x, y, std::nullopt, std::nullopt);
            SeriesNP lhs(N), lhs_star(N);
            for (int w = 0; w <= N; ++w) {
                NumericPoly acc, acc_star;
                for (const Index& k : enumerate_indices(w)) {
                    Real g = grade(k.depth(), 0);
                    acc += eval_Z(poly_lift_xy(k), xy, mzv_tol).scaled(g);
                    acc_star += eval_Z(poly_lift_xy_star(k), xy, mzv_tol).scaled(g);
                }
                lhs.set_coeff(w, acc);
                lhs_star.set_coeff(w, acc_star);
            }
            SeriesNP num = gamma1_numeric(N, x, mzv_tol) * gamma1_numeric(N, y, mzv_tol);
            SeriesNP den = gamma1_numeric(N, x * (one - A), mzv_tol) * gamma1_numeric(N, y * (one - A), mzv_tol);
            pairs.emplace_back(lhs, num * den.inverse());
            SeriesNP num_star = gamma1_numeric(N, x * (one + A), mzv_tol) * gamma1_numeric(N, y * (one + A), mzv_tol);
            pairs.emplace_back(lhs_star, num_star * num.inverse());
            break;
        }
        case NumericIdentity::gen_func_zeta_S: {
            SeriesNP lhs(N), lhs_star(N);
            for (int w = 0; w <= N; ++w) {
                NumericPoly acc, acc_star;
                for (const Index& k : enumerate_indices(w)) {
                    Real g = grade(k.depth(), 0);
                    acc += eval_Z_symmetric(k, false, mzv_tol).scaled(g);
                    acc_star += eval_Z_symmetric(k, true, mzv_tol).scaled(g);
                }
                lhs.set_coeff(w, acc);
                lhs_star.set_coeff(w, acc_star);
            }
            pairs.emplace_back(lhs, z_over_sin_numeric(N, one) * sin_over_z_numeric(N, one - A));
            pairs.emplace_back(lhs_star, sin_over_z_numeric(N, one) * z_over_sin_numeric(N, one + A));
            break;
        }
        case NumericIdentity::zeta_kal: {
            SeriesNP lhs(N), lhs_star(N);
            for (int w = 2; w <= N; ++w) {
                NumericPoly acc, acc_star;
                for (const IndexTriple& t : enumerate_triples(w)) {
                    Real g = grade(t.k.depth(), t.l.depth());
                    Index full = concat3(t.k, t.corner, t.l);
                    acc += eval_Z(IndexCombination::single(full), mzv_tol).scaled(g);
                    acc_star += eval_Z(star_expand(full), mzv_tol).scaled(g);
                }
                lhs.set_coeff(w, acc);
                lhs_star.set_coeff(w, acc_star);
            }
            SeriesNP G = gamma1_numeric(N, one, mzv_tol);
            pairs.emplace_back(lhs, prefactor_series(N, one - B, A - B, mzv_tol) * G *
                                        gamma1_numeric(N, one - B, mzv_tol).inverse());
            pairs.emplace_back(lhs_star, prefactor_series(N, one + A, A - B, mzv_tol) *
                                             gamma1_numeric(N, one + B, mzv_tol) * G.inverse());
            break;
        }
        case NumericIdentity::zeta_S_kal: {
            SeriesNP lhs(N), lhs_star(N);
            for (int w = 2; w <= N; ++w) {
                NumericPoly acc, acc_star;
                for (const IndexTriple& t : enumerate_triples(w)) {
                    Real g = grade(t.k.depth(), t.l.depth());
                    Index full = concat3(t.k, t.corner, t.l);
                    acc += eval_Z_symmetric(full, false, mzv_tol).scaled(g);
                    acc_star += eval_Z_symmetric(full, true, mzv_tol).scaled(g);
                }
                lhs.set_coeff(w, acc);
                lhs_star.set_coeff(w, acc_star);
            }
            SeriesNP zs1 = z_over_sin_numeric(N, one);
            SeriesNP rhs = prefactor_series(N, A - one, A - B, mzv_tol) * zs1 * sin_over_z_numeric(N, one - A) +
                           prefactor_series(N, one - B, A - B, mzv_tol) * zs1 * sin_over_z_numeric(N, one - B);
            pairs.emplace_back(lhs, rhs);
            SeriesNP sz1 = sin_over_z_numeric(N, one);
            SeriesNP rhs_star =
                prefactor_series(N, -(one + B), A - B, mzv_tol) * sz1 * z_over_sin_numeric(N, one + A) +
                prefactor_series(N, one + A, A - B, mzv_tol) * sz1 * z_over_sin_numeric(N, one + B);
            pairs.emplace_back(lhs_star, rhs_star);
            break;
        }
        case NumericIdentity::sum_schur_gen: {
            SeriesNP lhs(N);
            for (int w = 2; w <= N; ++w) {
                NumericPoly acc;
                for (const IndexTriple& t : enumerate_triples(w)) {
                    Real g = grade(t.k.depth(), t.l.depth());
                    acc += eval_Z(expand_antihook(AntiHook(t.k, t.l, t.corner)), mzv_tol).scaled(g);
                }
                lhs.set_coeff(w, acc);
            }
            pairs.emplace_back(lhs, prefactor_series(N, one + B, A + B, mzv_tol));
            break;
        }
        case NumericIdentity::gamma_reflection: {
            SeriesNP lhs = gamma1_numeric(N, one, mzv_tol) * gamma1_numeric(N, -one, mzv_tol);
            pairs.emplace_back(lhs, z_over_sin_numeric(N, one));
            break;
        }
        case NumericIdentity::main_theorem:
        case NumericIdentity::main_theorem_star: {
            bool star = id == NumericIdentity::main_theorem_star;
            SampleSpec xy = SampleSpec::xyAB(x, y, std::nullopt, std::nullopt);
            SeriesNP lhs(N);
            for (int w = 2; w <= N; ++w) {
                NumericPoly acc;
                for (const IndexTriple& t : enumerate_triples(w)) {
                    Real g = grade(t.k.depth(), t.l.depth());
                    Index full = concat3(t.k, t.corner, t.l);
                    acc += eval_Z(star ? poly_lift_xy_star(full) : poly_lift_xy(full), xy, mzv_tol).scaled(g);
                }
                lhs.set_coeff(w, acc);
            }
            pairs.emplace_back(lhs, main_theorem_rhs(N, x, y, A, B, star, mzv_tol));
            break;
        }
        case NumericIdentity::relation_sum_formulas:
            throw std::invalid_argument("relation_sum_formulas is checked per triple, not as a series");
    }
    return pairs;
}

// The two per-triple scalar identities relating symmetric values to Schur
// anti-hook values; returns the larger of the two residuals.
inline Real relation_sum_formulas_residual(const Index& k, int a, const Index& l, Real mzv_tol = 1e-10L) {
    int r = k.depth();
    int s = l.depth();
    auto sign = [](int e) { return e % 2 == 0 ? 1.0L : -1.0L; };
    Real worst = 0.0L;

    for (bool star : {false, true}) {
        NumericPoly lhs = eval_Z_symmetric(concat3(k, a, l), star, mzv_tol);
        NumericPoly rhs;
        for (int i = 0; i <= r; ++i) {
            Index tail = k.suffix(i);
            AntiHook hook = star ? AntiHook(tail, l.reversed(), a) : AntiHook(l.reversed(), tail, a);
            Real schur = eval_Z(expand_antihook(hook), mzv_tol).coeff(0);
            Real factor = sign(r - i) * sign(tail.weight() + a + l.weight()) * schur;
            rhs += eval_Z_symmetric(k.prefix(i), star, mzv_tol).scaled(factor);
        }
        for (int j = 0; j <= s; ++j) {
            AntiHook hook = star ? AntiHook(l.prefix(j).reversed(), k, a) : AntiHook(k, l.prefix(j).reversed(), a);
            Real schur = eval_Z(expand_antihook(hook), mzv_tol).coeff(0);
            rhs += eval_Z_symmetric(l.suffix(j), star, mzv_tol).scaled(sign(j) * schur);
        }
        worst = std::max(worst, max_abs_difference(lhs, rhs));
    }
    return worst;
}

inline NumericReport check_numeric_identity(NumericIdentity id, int N, const std::vector<SampleSpec>& samples,
                                            Real tol, Real mzv_tol = 1e-10L) {
    auto started = std::chrono::steady_clock::now();
    NumericReport report;
    report.identity = numeric_identity_str(id);
    report.order = N;
    report.tol = tol;
    if (samples.empty()) throw std::invalid_argument("check_numeric_identity needs at least one sample tuple");
    report.samples = project_samples(samples, numeric_identity_vars(id));

    if (id == NumericIdentity::relation_sum_formulas) {
        for (int w = 2; w <= N; ++w)
            for (const IndexTriple& t : enumerate_triples(w)) {
                Real residual = relation_sum_formulas_residual(t.k, t.corner, t.l, mzv_tol);
                if (residual > tol && !report.first_failure)
                    report.first_failure = NumericFailure{"(" + t.k.str() + ";" + t.l.str() + ";" +
                                                              std::to_string(t.corner) + ")",
                                                          w, 0, residual, 0};
                report.max_abs_residual = std::max(report.max_abs_residual, residual);
            }
    } else {
        for (const SampleSpec& s : report.samples) {
            for (const SeriesPair& pair : numeric_identity_sides(id, N, s, mzv_tol)) {
                report.max_abs_residual = std::max(report.max_abs_residual, max_series_difference(pair.lhs, pair.rhs));
                if (!report.first_failure) {
                    if (auto failure = first_numeric_failure(pair.lhs, pair.rhs, tol)) {
                        failure->sample = s.str();
                        report.first_failure = failure;
                    }
                }
            }
        }
        if (id == NumericIdentity::gamma_reflection) {
            auto pair = numeric_identity_sides(id, N, SampleSpec{}, mzv_tol).front();
            report.max_odd_residual = 0.0L;
            for (int n = 1; n <= N; n += 2)
                report.max_odd_residual =
                    std::max(report.max_odd_residual, max_abs_difference(pair.lhs.coeff(n), pair.rhs.coeff(n)));
        }
    }

    report.holds = report.max_abs_residual <= tol;
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    return report;
}

// ---- sum formulas -------------------------------------------------------------

struct SumFormulaReport {
    int w = 0;
    int r = 0;
    int s = -1;  // -1 for the plain (k, a) sum formula
    bool star = false;
    Real lhs = 0;
    Real rhs = 0;
    Real residual = 0;
    Real t_residual = 0;  // largest |T-coefficient| among the summands
    bool holds = false;
};

inline SumFormulaReport check_sum_formula(int w, int r, bool star, Real tol, Real mzv_tol = 1e-10L) {
    if (w < r + 2) throw std::invalid_argument("sum formula needs w >= r + 2");
    SumFormulaReport report;
    report.w = w;
    report.r = r;
    report.star = star;
    Real sum = 0.0L;
    for (int a = 2; a <= w - r; ++a) {
        for (const Index& k : enumerate_indices(w - a)) {
            if (k.depth() != r) continue;
            Index full = k.append(a);
            sum += star ? eval_Z(star_expand(full), mzv_tol).coeff(0) : eval_admissible(full, mzv_tol);
        }
    }
    report.lhs = sum;
    report.rhs = (star ? to_long_double(Rational(binomial(w - 1, r))) : 1.0L) * zeta_value(w, mzv_tol);
    report.residual = std::fabs(report.lhs - report.rhs);
    report.holds = report.residual <= tol;
    return report;
}

inline SumFormulaReport check_schur_sum_formula(int w, int r, int s, Real tol, Real mzv_tol = 1e-10L) {
    if (w < r + s + 2) throw std::invalid_argument("Schur sum formula needs w >= r + s + 2");
    SumFormulaReport report;
    report.w = w;
    report.r = r;
    report.s = s;
    Real sum = 0.0L;
    for (const IndexTriple& t : enumerate_triples(w)) {
        if (t.k.depth() != r || t.l.depth() != s) continue;
        NumericPoly value = eval_Z(expand_antihook(AntiHook(t.k, t.l, t.corner)), mzv_tol);
        report.t_residual = std::max(report.t_residual, value.max_abs_t_part());
        sum += value.coeff(0);
    }
    report.lhs = sum;
    report.rhs = to_long_double(Rational(binomial(w - 1, s))) * zeta_value(w, mzv_tol);
    report.residual = std::fabs(report.lhs - report.rhs);
    report.holds = report.residual <= tol && report.t_residual <= tol;
    return report;
}

}  // namespace mzv
