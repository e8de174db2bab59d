#include "mzv/mzv_eval.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

using namespace mzv;

namespace {
constexpr Real kPi = std::numbers::pi_v<Real>;
}

TEST_CASE("empty index evaluates to one") {
    REQUIRE(holder_eval(Index{}).value == 1.0L);
    REQUIRE(eval_admissible(Index{}) == 1.0L);
}

TEST_CASE("single zeta values against closed forms") {
    REQUIRE(std::fabs(eval_admissible(Index{2}) - kPi * kPi / 6.0L) < 1e-15L);
    REQUIRE(std::fabs(eval_admissible(Index{4}) - kPi * kPi * kPi * kPi / 90.0L) < 1e-15L);
    REQUIRE(std::fabs(eval_admissible(Index{3}) - 1.2020569031595942854L) < 1e-15L);
}

TEST_CASE("Euler's double zeta evaluations") {
    REQUIRE(std::fabs(eval_admissible(Index{1, 2}) - eval_admissible(Index{3})) < 1e-14L);
    // zeta(2,2) = pi^4 / 120
    REQUIRE(std::fabs(eval_admissible(Index{2, 2}) - kPi * kPi * kPi * kPi / 120.0L) < 1e-15L);
}

TEST_CASE("brute force oracle and its tail bound") {
    MZVResult z2 = brute_force_mzv(Index{2}, 10000);
    REQUIRE(std::fabs(z2.value - 1.64488L) < 1e-4L);
    REQUIRE(z2.error_bound < 2e-4L);
    REQUIRE(std::fabs(z2.value - eval_admissible(Index{2})) <= z2.error_bound);

    // the depth-two tail decays like (ln M)/M, about 1.1e-3 at M = 10^4
    MZVResult z12 = brute_force_mzv(Index{1, 2}, 10000);
    REQUIRE(std::fabs(z12.value - eval_admissible(Index{3})) < 2e-3L);
    REQUIRE(std::fabs(z12.value - eval_admissible(Index{1, 2})) <= z12.error_bound);

    MZVResult z32 = brute_force_mzv(Index{3, 2}, 1000);
    REQUIRE(std::fabs(z32.value - eval_admissible(Index{3, 2})) <= z32.error_bound);
}

TEST_CASE("oracle bound is rigorous across small weights") {
    for (int w = 2; w <= 5; ++w) {
        for (const Index& k : enumerate_indices(w)) {
            if (!k.admissible()) continue;
            MZVResult oracle = brute_force_mzv(k, 4000);
            REQUIRE(std::fabs(oracle.value - eval_admissible(k)) <= oracle.error_bound);
        }
    }
}

TEST_CASE("non-admissible input is rejected") {
    REQUIRE_THROWS_AS(eval_admissible(Index{2, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(brute_force_mzv(Index{1}, 1000), std::invalid_argument);
}

TEST_CASE("unreachable tolerance is an error") {
    REQUIRE_THROWS_AS(eval_admissible(Index{2, 3}, 1e-30L), std::runtime_error);
}

TEST_CASE("cache serves repeated lookups") {
    Real first = eval_admissible(Index{5, 3});
    auto cached = MZVCache::instance().lookup(Index{5, 3}, 1e-10L);
    REQUIRE(cached.has_value());
    REQUIRE(cached->value == first);
}
