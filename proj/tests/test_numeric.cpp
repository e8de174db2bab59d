#include "mzv/numeric_checks.hpp"
#include "mzv/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

using namespace mzv;

namespace {
IndexCombination sym(const Index& k) { return IndexCombination::single(k); }
}  // namespace

TEST_CASE("eval_Z basics") {
    REQUIRE(eval_Z(IndexCombination::unit()).coeff(0) == 1.0L);

    NumericPoly product = eval_Z(harmonic_product(sym(Index{2}), sym(Index{3})));
    Real expected = eval_admissible(Index{2}) * eval_admissible(Index{3});
    REQUIRE(std::fabs(product.coeff(0) - expected) < 1e-13L);
    REQUIRE(product.max_abs_t_part() == 0.0L);

    // zeta*(1,2) = zeta(1,2) + zeta(3) = 2 zeta(3)
    NumericPoly star = eval_Z(star_expand(Index{1, 2}));
    REQUIRE(std::fabs(star.coeff(0) - 2.0L * eval_admissible(Index{3})) < 1e-13L);

    // zeta(1) = T
    NumericPoly t = eval_Z(sym(Index{1}));
    REQUIRE(t.coeff(0) == 0.0L);
    REQUIRE(t.coeff(1) == 1.0L);
}

TEST_CASE("missing sample values are detected") {
    IndexCombination u = sym(Index{2}).scaled(PolyScalar::variable(Var::x));
    REQUIRE_THROWS_AS(eval_Z(u), std::invalid_argument);
}

TEST_CASE("symmetric values are T-free") {
    for (int w = 1; w <= 5; ++w) {
        for (const Index& k : enumerate_indices(w)) {
            REQUIRE(eval_Z_symmetric(k).max_abs_t_part() < 1e-13L);
            REQUIRE(eval_Z_symmetric(k, true).max_abs_t_part() < 1e-13L);
        }
    }
}

TEST_CASE("sum formula instances") {
    SumFormulaReport euler = check_sum_formula(3, 1, false, 1e-8L);
    REQUIRE(euler.holds);
    REQUIRE(euler.residual < 1e-13L);  // zeta(1,2) = zeta(3)

    SumFormulaReport euler_star = check_sum_formula(3, 1, true, 1e-8L);
    REQUIRE(euler_star.holds);  // zeta*(1,2) = 2 zeta(3)

    SumFormulaReport w4 = check_sum_formula(4, 1, false, 1e-8L);
    REQUIRE(w4.holds);  // zeta(1,3) + zeta(2,2) = zeta(4)

    REQUIRE_THROWS_AS(check_sum_formula(3, 2, false, 1e-8L), std::invalid_argument);
}

TEST_CASE("Schur sum formula instances") {
    // (r, s, w) = (1, 1, 4): the single anti-hook ((1),(1),2) sums to 3 zeta(4)
    SumFormulaReport r = check_schur_sum_formula(4, 1, 1, 1e-8L);
    REQUIRE(r.holds);
    REQUIRE(std::fabs(r.rhs - 3.0L * eval_admissible(Index{4})) < 1e-14L);

    // s = 0 reduces to the plain sum formula, r = 0 to the star one
    REQUIRE(check_schur_sum_formula(5, 2, 0, 1e-8L).holds);
    REQUIRE(check_schur_sum_formula(3, 0, 1, 1e-8L).holds);
}

TEST_CASE("reflection series anchors") {
    // W^2 coefficient of Gamma_1(W) Gamma_1(-W) is zeta(2) = pi^2/6; the odd
    // coefficients cancel together with every power of T.
    Real pi = std::numbers::pi_v<Real>;
    SeriesNP lhs = gamma1_numeric(4, Rational(1)) * gamma1_numeric(4, Rational(-1));
    REQUIRE(std::fabs(lhs.coeff(2).coeff(0) - pi * pi / 6.0L) < 1e-15L);
    REQUIRE(lhs.coeff(1).max_abs() < 1e-17L);
    REQUIRE(lhs.coeff(3).max_abs() < 1e-17L);
    REQUIRE(lhs.coeff(2).max_abs_t_part() < 1e-17L);
    REQUIRE(std::fabs(z_over_sin_numeric(4, Rational(1)).coeff(2).coeff(0) - pi * pi / 6.0L) < 1e-15L);
}

TEST_CASE("prefactor handles equal scale arguments") {
    // at A = 1 the divided difference degenerates but stays finite
    SeriesNP f = prefactor_series(6, Rational(1), Rational(1));
    REQUIRE(std::fabs(f.coeff(4).coeff(0) - 3.0L * eval_admissible(Index{4})) < 1e-14L);
}

TEST_CASE("numeric identities at toy order") {
    std::vector<SampleSpec> samples = default_samples();
    for (NumericIdentity id :
         {NumericIdentity::psi_sum_ka, NumericIdentity::gen_func_zeta, NumericIdentity::gen_func_zeta_S,
          NumericIdentity::gamma_reflection, NumericIdentity::sum_schur_gen}) {
        NumericReport r = check_numeric_identity(id, 5, samples, 1e-8L);
        INFO(r.identity);
        REQUIRE(r.holds);
    }
    NumericReport main = check_numeric_identity(NumericIdentity::main_theorem, 4, samples, 1e-8L);
    REQUIRE(main.holds);
}

namespace {

// Test-only oracle: the tableau nested sum behind an anti-hook value, with a
// strictly increasing column bounded by p and a weakly increasing row bounded
// by p.  Independent of the symbolic expansion it checks.
Real schur_tableau_sum(const AntiHook& h, int M) {
    std::vector<Real> strict(static_cast<size_t>(M) + 1, 1.0L);  // chains m_1 < ... < m_r < p
    for (int part : h.k_row.parts()) {
        std::vector<Real> next(static_cast<size_t>(M) + 1, 0.0L);
        Real running = 0.0L;
        for (int p = 1; p <= M; ++p) {
            next[p] = running;  // chains strictly below p
            running += strict[p] * std::pow(static_cast<Real>(p), -static_cast<Real>(part));
        }
        strict = std::move(next);
    }
    std::vector<Real> weak(static_cast<size_t>(M) + 1, 1.0L);  // chains n_1 <= ... <= n_s <= p
    for (int part : h.l_row.parts()) {
        std::vector<Real> next(static_cast<size_t>(M) + 1, 0.0L);
        Real running = 0.0L;
        for (int p = 1; p <= M; ++p) {
            running += weak[p] * std::pow(static_cast<Real>(p), -static_cast<Real>(part));
            next[p] = running;
        }
        weak = std::move(next);
    }
    Real value = 0.0L;
    for (int p = 1; p <= M; ++p)
        value += strict[p] * weak[p] * std::pow(static_cast<Real>(p), -static_cast<Real>(h.corner));
    return value;
}

}  // namespace

TEST_CASE("anti-hook expansion matches the tableau nested sum") {
    // The four-term example first, then every convergent hook of weight <= 6.
    const int M = 4000;
    for (int w = 2; w <= 6; ++w) {
        for (const IndexTriple& t : enumerate_triples(w)) {
            AntiHook h(t.k, t.l, t.corner);
            NumericPoly symbolic = eval_Z(expand_antihook(h));
            REQUIRE(symbolic.max_abs_t_part() < 1e-12L);
            Real oracle = schur_tableau_sum(h, M);
            // strict chains < p are below H_p^r / r!, weak ones below H_p^s
            Real tail = detail::log_power_tail(t.k.depth() + t.l.depth(), t.corner, M) + 1e-12L;
            INFO("hook (" << t.k.str() << ";" << t.l.str() << ";" << t.corner << ")");
            REQUIRE(std::fabs(symbolic.coeff(0) - oracle) <= tail);
        }
    }
}

TEST_CASE("blocks of twos evaluate to the classical pi powers") {
    Real pi = std::numbers::pi_v<Real>;
    // zeta({2}^n) = pi^(2n) / (2n+1)!
    Real factorial = 1.0L;
    Real pipow = 1.0L;
    for (int n = 1; n <= 4; ++n) {
        factorial *= (2 * n) * (2 * n + 1);
        pipow *= pi * pi;
        Index twos(std::vector<int>(static_cast<size_t>(n), 2));
        REQUIRE(std::fabs(eval_admissible(twos) - pipow / factorial) < 1e-15L);
    }
}

TEST_CASE("relation between the sum formulas at a fixed triple") {
    REQUIRE(relation_sum_formulas_residual(Index{1}, 2, Index{1}) < 1e-14L);
    REQUIRE(relation_sum_formulas_residual(Index{}, 3, Index{2}) < 1e-14L);
}

TEST_CASE("config validation") {
    RunConfig config;
    config.max_weight = 0;
    REQUIRE_THROWS_AS(config.validate(), std::invalid_argument);
    config.max_weight = 6;
    config.suites = {"nope"};
    REQUIRE_THROWS_AS(config.validate(), std::invalid_argument);
    config.suites = {"hopf"};
    config.tolerance = 0;
    REQUIRE_THROWS_AS(config.validate(), std::invalid_argument);
    config.tolerance = 1e-8L;
    REQUIRE_NOTHROW(config.validate());
}

TEST_CASE("value cache persists and reloads") {
    Real value = eval_admissible(Index{4, 2});
    std::string path = "mzv_cache_test.json";
    save_mzv_cache(path);
    MZVCache::instance().clear();
    REQUIRE_FALSE(MZVCache::instance().lookup(Index{4, 2}, 1e-10L).has_value());
    load_mzv_cache(path);
    auto hit = MZVCache::instance().lookup(Index{4, 2}, 1e-10L);
    REQUIRE(hit.has_value());
    REQUIRE(std::fabs(hit->value - value) < 1e-18L);
    std::remove(path.c_str());
}

TEST_CASE("combination JSON encoding is deterministic") {
    IndexCombination u = sym(Index{2, 1}).scaled(PolyScalar::variable(Var::A)) + sym(Index{3}).scaled(Rational(-1, 2));
    REQUIRE(to_json(u).dump() ==
            R"([{"coeff":[{"monomial":"x0y0A1B0","value":"1/1"}],"index":[2,1]},)"
            R"({"coeff":[{"monomial":"x0y0A0B0","value":"-1/2"}],"index":[3]}])");
}

TEST_CASE("worker pool output is deterministic") {
    RunConfig config;
    config.max_weight = 4;
    config.suites = {"hopf", "schur"};
    auto strip_timing = [](SuiteRun run) {
        std::vector<std::string> lines;
        for (CheckLine& line : run.lines) {
            line.json.erase("elapsed_ms");
            lines.push_back(line.json.dump());
        }
        return lines;
    };
    config.jobs = 1;
    auto serial = strip_timing(run_suites(config));
    config.jobs = 3;
    auto pooled = strip_timing(run_suites(config));
    REQUIRE(serial == pooled);
    REQUIRE_FALSE(serial.empty());
}

TEST_CASE("report serialization is stable") {
    NumericReport r;
    r.identity = "gamma_reflection";
    r.order = 4;
    r.tol = 1e-8L;
    r.max_abs_residual = 0.00012345678901234L;
    r.holds = true;
    Json j = to_json(r);
    REQUIRE(j["max_abs_residual"] == "0.000123456789012");
    REQUIRE(j["tol"] == "1e-08");
}
