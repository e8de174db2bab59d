#pragma once

#include "mzv/antihook.hpp"
#include "mzv/combination.hpp"
#include "mzv/series.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace mzv {

using SeriesIC = TruncatedSeries<IndexCombination>;

// exp(sum_{k>=1} [k]/k W^k), truncated at order N.
inline SeriesIC gamma1_I(int N) {
    SeriesIC gen(N);
    for (int k = 1; k <= N; ++k)
        gen.set_coeff(k, IndexCombination::single(Index{k}, Rational(1, k)));
    return gen.exp();
}

inline IndexCombination scalar_combination(const PolyScalar& c) {
    return IndexCombination::single(Index{}, c);
}

// W -> c W for a scalar polynomial c.
inline SeriesIC series_scale_W(const SeriesIC& f, const PolyScalar& c) {
    return f.scale_variable(scalar_combination(c));
}

inline SeriesIC series_antipode_tilde(const SeriesIC& f) {
    SeriesIC r(f.order());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, antipode_tilde(f.coeff(n)));
    return r;
}

inline SeriesIC series_substituted(const SeriesIC& f, const std::array<std::optional<PolyScalar>, 4>& repl) {
    SeriesIC r(f.order());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n).substituted(repl));
    return r;
}

// sum over all (k, l, a>=2) of total weight <= N of the anti-hook expansion,
// graded by A^(dep k) B^(dep l) W^(weight).
inline SeriesIC build_F_I(int N) {
    if (N < 2) throw std::invalid_argument("build_F_I needs N >= 2");
    SeriesIC f(N);
    for (int w = 2; w <= N; ++w) {
        IndexCombination coeff;
        for (const IndexTriple& t : enumerate_triples(w)) {
            PolyScalar grade = PolyScalar::variable(Var::A, t.k.depth()) * PolyScalar::variable(Var::B, t.l.depth());
            coeff.add_scaled(expand_antihook(AntiHook(t.k, t.l, t.corner)), grade);
        }
        f.set_coeff(w, coeff);
    }
    return f;
}

// ---- enumeration-built left-hand sides -------------------------------------

inline SeriesIC lhs_gen_func_k(int N, bool star) {
    SeriesIC f(N);
    for (int w = 0; w <= N; ++w) {
        IndexCombination coeff;
        for (const Index& k : enumerate_indices(w)) {
            PolyScalar grade = PolyScalar::variable(Var::A, k.depth());
            coeff.add_scaled(star ? star_expand(k) : IndexCombination::single(k), grade);
        }
        f.set_coeff(w, coeff);
    }
    return f;
}

inline SeriesIC lhs_gen_func_kxy(int N, bool star) {
    SeriesIC f(N);
    for (int w = 0; w <= N; ++w) {
        IndexCombination coeff;
        for (const Index& k : enumerate_indices(w)) {
            PolyScalar grade = PolyScalar::variable(Var::A, k.depth());
            coeff.add_scaled(star ? poly_lift_xy_star(k) : poly_lift_xy(k), grade);
        }
        f.set_coeff(w, coeff);
    }
    return f;
}

inline SeriesIC lhs_kal_xy(int N, bool star) {
    SeriesIC f(N);
    for (int w = 2; w <= N; ++w) {
        IndexCombination coeff;
        for (const IndexTriple& t : enumerate_triples(w)) {
            Index full = concat3(t.k, t.corner, t.l);
            PolyScalar grade = PolyScalar::variable(Var::A, t.k.depth()) * PolyScalar::variable(Var::B, t.l.depth());
            coeff.add_scaled(star ? poly_lift_xy_star(full) : poly_lift_xy(full), grade);
        }
        f.set_coeff(w, coeff);
    }
    return f;
}

// ---- exact identity checks --------------------------------------------------

enum class ExactIdentity {
    gen_func_k,
    gen_func_k_star,
    gen_func_kxy,
    gen_func_kxy_star,
    prop_gen_func_kal_xy,
    prop_gen_func_kal_xy_star,
    remark_3_expansions,
};

inline const char* exact_identity_str(ExactIdentity id) {
    switch (id) {
        case ExactIdentity::gen_func_k: return "gen_func_k";
        case ExactIdentity::gen_func_k_star: return "gen_func_k_star";
        case ExactIdentity::gen_func_kxy: return "gen_func_kxy";
        case ExactIdentity::gen_func_kxy_star: return "gen_func_kxy_star";
        case ExactIdentity::prop_gen_func_kal_xy: return "prop_gen_func_kal_xy";
        case ExactIdentity::prop_gen_func_kal_xy_star: return "prop_gen_func_kal_xy_star";
        case ExactIdentity::remark_3_expansions: return "remark_3_expansions";
    }
    return "?";
}

inline ExactIdentity parse_exact_identity(const std::string& name) {
    for (ExactIdentity id : {ExactIdentity::gen_func_k, ExactIdentity::gen_func_k_star, ExactIdentity::gen_func_kxy,
                             ExactIdentity::gen_func_kxy_star, ExactIdentity::prop_gen_func_kal_xy,
                             ExactIdentity::prop_gen_func_kal_xy_star, ExactIdentity::remark_3_expansions})
        if (name == exact_identity_str(id)) return id;
    throw std::invalid_argument("unknown exact identity: " + name);
}

struct ExactFailure {
    int w = 0;
    std::string where;  // which sub-identity, for multi-part checks
    Index index;
    Monomial monomial{0, 0, 0, 0};
    Rational lhs;
    Rational rhs;
};

struct ExactReport {
    std::string identity;
    int order = 0;
    bool holds = false;
    std::optional<ExactFailure> first_failure;
    long long elapsed_ms = 0;
};

inline std::optional<ExactFailure> first_series_difference(const SeriesIC& lhs, const SeriesIC& rhs,
                                                           const std::string& where = "") {
    for (int n = 0; n <= lhs.order(); ++n) {
        IndexCombination diff = lhs.coeff(n) - rhs.coeff(n);
        if (diff.is_zero()) continue;
        const auto& [index, poly] = *diff.terms().begin();
        Monomial m = poly.terms().begin()->first;
        ExactFailure f;
        f.w = n;
        f.where = where;
        f.index = index;
        f.monomial = m;
        f.lhs = lhs.coeff(n).coefficient(index).coefficient(m);
        f.rhs = rhs.coeff(n).coefficient(index).coefficient(m);
        return f;
    }
    return std::nullopt;
}

inline ExactReport exact_identity_check(ExactIdentity id, int N) {
    auto started = std::chrono::steady_clock::now();
    ExactReport report;
    report.identity = exact_identity_str(id);
    report.order = N;

    const PolyScalar one = PolyScalar::one();
    const PolyScalar A = PolyScalar::variable(Var::A);
    const PolyScalar x = PolyScalar::variable(Var::x);
    const PolyScalar y = PolyScalar::variable(Var::y);

    SeriesIC G = gamma1_I(N);
    std::optional<ExactFailure> failure;

    switch (id) {
        case ExactIdentity::gen_func_k: {
            SeriesIC rhs = G * series_scale_W(G, one - A).inverse();
            failure = first_series_difference(lhs_gen_func_k(N, false), rhs);
            break;
        }
        case ExactIdentity::gen_func_k_star: {
            SeriesIC rhs = series_scale_W(G, one + A) * G.inverse();
            failure = first_series_difference(lhs_gen_func_k(N, true), rhs);
            break;
        }
        case ExactIdentity::gen_func_kxy: {
            SeriesIC num = series_scale_W(G, x) * series_scale_W(G, y);
            SeriesIC den = series_scale_W(G, x * (one - A)) * series_scale_W(G, y * (one - A));
            failure = first_series_difference(lhs_gen_func_kxy(N, false), num * den.inverse());
            break;
        }
        case ExactIdentity::gen_func_kxy_star: {
            SeriesIC num = series_scale_W(G, x * (one + A)) * series_scale_W(G, y * (one + A));
            SeriesIC den = series_scale_W(G, x) * series_scale_W(G, y);
            failure = first_series_difference(lhs_gen_func_kxy(N, true), num * den.inverse());
            break;
        }
        case ExactIdentity::prop_gen_func_kal_xy: {
            const PolyScalar B = PolyScalar::variable(Var::B);
            SeriesIC F = build_F_I(N);
            SeriesIC Gx = series_scale_W(G, x), Gy = series_scale_W(G, y);
            SeriesIC numerator = Gx * Gy;
            SeriesIC term1 = series_scale_W(series_substituted(F, {std::nullopt, std::nullopt, B, -A}), y) *
                             (numerator * (series_scale_W(G, x * (one - A)) * series_scale_W(G, y * (one - A))).inverse());
            SeriesIC term2 = series_scale_W(series_substituted(F, {std::nullopt, std::nullopt, A, -B}), x) *
                             (numerator * (series_scale_W(G, x * (one - B)) * series_scale_W(G, y * (one - B))).inverse());
            failure = first_series_difference(lhs_kal_xy(N, false), term1 + term2);
            break;
        }
        case ExactIdentity::prop_gen_func_kal_xy_star: {
            const PolyScalar B = PolyScalar::variable(Var::B);
            SeriesIC F = build_F_I(N);
            SeriesIC Gx = series_scale_W(G, x), Gy = series_scale_W(G, y);
            SeriesIC denominator_inv = (Gx * Gy).inverse();
            SeriesIC term1 = series_scale_W(series_substituted(F, {std::nullopt, std::nullopt, -A, B}), y) *
                             (series_scale_W(G, x * (one + A)) * series_scale_W(G, y * (one + A)) * denominator_inv);
            SeriesIC term2 = series_scale_W(series_substituted(F, {std::nullopt, std::nullopt, -B, A}), x) *
                             (series_scale_W(G, x * (one + B)) * series_scale_W(G, y * (one + B)) * denominator_inv);
            failure = first_series_difference(lhs_kal_xy(N, true), term1 + term2);
            break;
        }
        case ExactIdentity::remark_3_expansions: {
            SeriesIC Ginv = G.inverse();
            SeriesIC all_indices(N), ones_star(N), signed_ones(N), signed_star(N);
            for (int n = 0; n <= N; ++n) {
                IndexCombination plain, star_signed;
                for (const Index& k : enumerate_indices(n)) {
                    plain += IndexCombination::single(k);
                    star_signed.add_scaled(star_expand(k), Rational(k.depth() % 2 == 0 ? 1 : -1));
                }
                all_indices.set_coeff(n, plain);
                signed_star.set_coeff(n, star_signed);
                ones_star.set_coeff(n, star_expand(Index::ones(n)));
                signed_ones.set_coeff(n, IndexCombination::single(Index::ones(n), Rational(n % 2 == 0 ? 1 : -1)));
            }
            failure = first_series_difference(G, all_indices, "gamma1=sum_indices");
            if (!failure) failure = first_series_difference(G, ones_star, "gamma1=ones_star");
            if (!failure) failure = first_series_difference(Ginv, signed_ones, "gamma1_inv=signed_ones");
            if (!failure) failure = first_series_difference(Ginv, signed_star, "gamma1_inv=signed_star");
            break;
        }
    }

    report.first_failure = failure;
    report.holds = !failure.has_value();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    return report;
}

// ---- the counterexample finder ----------------------------------------------

struct RemarkWitness {
    int w = 0;
    int r = 0;
    int s = 0;
    IndexCombination lhs;
    IndexCombination rhs;
};

struct RemarkReport {
    int order = 0;
    std::optional<RemarkWitness> witness;       // first mismatch, (w, then (r, s) lex)
    std::optional<RemarkWitness> b0_witness;    // first mismatch within the B-degree-0 column
    long long elapsed_ms = 0;
};

// Compares the anti-hook generating function against
// W/(1-A) (psi_{1,I}((1+B)W) - psi_{1,I}((A+B)W)) with psi_{1,I}(W) defined
// as sum_{k>=2} [k] W^(k-1); the W^w coefficient of that side is
// [w] * sum_{j=0}^{w-2} (1+B)^j (A+B)^(w-2-j).
inline RemarkReport find_remark_counterexample(int N) {
    auto started = std::chrono::steady_clock::now();
    if (N < 2) throw std::invalid_argument("find_remark_counterexample needs N >= 2");
    RemarkReport report;
    report.order = N;

    const PolyScalar one = PolyScalar::one();
    const PolyScalar A = PolyScalar::variable(Var::A);
    const PolyScalar B = PolyScalar::variable(Var::B);
    SeriesIC lhs = build_F_I(N);

    for (int w = 2; w <= N; ++w) {
        PolyScalar dq;
        for (int j = 0; j <= w - 2; ++j) dq += (one + B).pow(j) * (A + B).pow(w - 2 - j);
        IndexCombination rhs_w = IndexCombination::single(Index{w}, dq);
        const IndexCombination& lhs_w = lhs.coeff(w);
        for (int r = 0; r <= w - 2; ++r) {
            for (int s = 0; s <= w - 2; ++s) {
                IndexCombination lc = lhs_w.coefficient_of_AB(r, s);
                IndexCombination rc = rhs_w.coefficient_of_AB(r, s);
                if (lc == rc) continue;
                if (!report.witness) report.witness = RemarkWitness{w, r, s, lc, rc};
                if (s == 0 && !report.b0_witness) report.b0_witness = RemarkWitness{w, r, s, lc, rc};
            }
        }
        if (report.witness && report.b0_witness) break;
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace mzv
