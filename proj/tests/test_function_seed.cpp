#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "opmono/function_seed.hpp"
#include "test_support.hpp"

using namespace opmono;

namespace {

// Test seed whose derivative e^{x^2} is positive and increasing on [0, inf)
// but log-convex, so the concavity condition must fail.
FunctionSeed expsq_seed() {
    return {"expsq",
            {},
            -std::numeric_limits<double>::infinity(),
            [](double x) { return x; }, // f itself is irrelevant to the condition checks
            [](double x) { return std::exp(x * x); }};
}

} // namespace

TEST_CASE("builtin_seed: evaluation and rejection") {
    auto p2 = builtin_seed("pow", {2.0});
    CHECK(p2.f(3.0) == doctest::Approx(9.0));
    CHECK(p2.fprime(3.0) == doctest::Approx(6.0));
    CHECK(p2.gamma == 0.0);

    auto e = builtin_seed("exp");
    CHECK(e.f(0.0) == doctest::Approx(1.0));
    CHECK(e.fprime(0.0) == doctest::Approx(1.0));
    CHECK(std::isinf(e.gamma));

    CHECK_THROWS_AS(builtin_seed("pow", {1.0}), AdmissibilityViolation);
    CHECK_THROWS_AS(builtin_seed("pow", {0.5}), AdmissibilityViolation);
    CHECK_THROWS_AS(builtin_seed("pow", {}), std::invalid_argument);
    CHECK_THROWS_AS(builtin_seed("sinh"), std::invalid_argument);
}

TEST_CASE("verify_conditions: builtin seeds pass") {
    auto e = builtin_seed("exp");
    auto rep = verify_conditions(e, {-2.0, -1.0, 0.0, 1.0, 2.0});
    CHECK(rep.all_ok());
    CHECK(rep.failing_points.empty());
    // log f' is linear, so midpoint concavity holds with equality.
    CHECK(rep.concavity_margin == doctest::Approx(0.0).epsilon(1e-12));

    auto p2 = builtin_seed("pow", {2.0});
    auto rep2 = verify_conditions(p2, {0.5, 1.0, 2.0, 4.0});
    CHECK(rep2.all_ok());
    CHECK(rep2.positivity_margin == doctest::Approx(1.0)); // f'(0.5) = 1
}

TEST_CASE("verify_conditions: log-convex derivative fails condition (iii)") {
    auto rep = verify_conditions(expsq_seed(), {0.0, 1.0, 2.0});
    CHECK(rep.positivity_ok);
    CHECK(rep.strict_increase_ok);
    CHECK_FALSE(rep.log_concavity_ok);
    CHECK_FALSE(rep.all_ok());
    // Worst pair is (0, 2): log f'(1) = 1 against (0 + 4)/2 = 2.
    CHECK(rep.concavity_margin == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::find(rep.failing_points.begin(), rep.failing_points.end(), 0.0) !=
          rep.failing_points.end());
    CHECK(std::find(rep.failing_points.begin(), rep.failing_points.end(), 2.0) !=
          rep.failing_points.end());
}

TEST_CASE("verify_conditions: precondition errors") {
    auto p2 = builtin_seed("pow", {2.0});
    CHECK_THROWS_AS(verify_conditions(p2, {0.0, 1.0, 2.0}), DomainError); // 0 <= gamma
    CHECK_THROWS_AS(verify_conditions(p2, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(verify_conditions(p2, {2.0, 1.0, 3.0}), std::invalid_argument);
}

TEST_CASE("verify_conditions: builtin seeds on default 64-point grids") {
    for (const auto& seed : testing::builtin_test_seeds()) {
        auto grid = default_verification_grid(seed);
        CHECK(grid.size() == 64);
        auto rep = verify_conditions(seed, grid);
        CHECK(rep.all_ok());
    }
}

TEST_CASE("chain_inequality_check: closed-form values for exp on (0, 1)") {
    auto e = builtin_seed("exp");
    auto c = chain_inequality_check(e, 0.0, 1.0);
    // log f' is the identity on the segment, so mid = int_0^1 (1 - t) dt = 1/2
    // and lhs = (0 + 1)/2; rhs = log int_0^1 e^{1-t} dt = log(e - 1).
    CHECK(c.lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.mid == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(c.rhs == doctest::Approx(std::log(std::exp(1.0) - 1.0)).epsilon(1e-10));
    CHECK(c.ok);
}

TEST_CASE("chain_inequality_check: closed-form values for pow 2 on (1, 3)") {
    auto p2 = builtin_seed("pow", {2.0});
    auto c = chain_inequality_check(p2, 1.0, 3.0);
    // f' = 2x: lhs = (log 2 + log 6)/2, mid = int log(2(3-2t)) dt
    //        = log 2 + (3 log 3)/2 - 1, rhs = log int 2(3-2t) dt = log 4.
    CHECK(c.lhs == doctest::Approx(0.5 * std::log(12.0)).epsilon(1e-12));
    CHECK(c.mid ==
          doctest::Approx(std::log(2.0) + 1.5 * std::log(3.0) - 1.0).epsilon(1e-10));
    CHECK(c.rhs == doctest::Approx(std::log(4.0)).epsilon(1e-10));
    CHECK(c.ok);
}

TEST_CASE("chain_inequality_check: preconditions") {
    auto e = builtin_seed("exp");
    CHECK_THROWS_AS(chain_inequality_check(e, 1.0, 1.0), DegeneratePair);
    CHECK_THROWS_AS(chain_inequality_check(e, 0.0, 1.0, 8), std::invalid_argument);
    auto p2 = builtin_seed("pow", {2.0});
    CHECK_THROWS_AS(chain_inequality_check(p2, -1.0, 2.0), DomainError);
}

TEST_CASE("chain_inequality_check: ordering holds over random pairs") {
    for (const auto& seed : testing::builtin_test_seeds()) {
        std::mt19937_64 rng(909);
        const auto w = testing::sample_window(seed);
        for (int trial = 0; trial < 500; ++trial) {
            auto [x, y] = testing::random_pair(rng, w, 1e-3, 10.0);
            auto c = chain_inequality_check(seed, x, y);
            CHECK(c.ok);
            CHECK(c.lhs <= c.mid + 1e-12);
            CHECK(c.mid < c.rhs);
            if (std::abs(x - y) >= 0.1) CHECK(c.rhs - c.mid > 1e-10);
        }
    }
}

TEST_CASE("chain_inequality_check: symmetric in (x, y)") {
    std::mt19937_64 rng(77);
    for (const auto& seed : testing::builtin_test_seeds()) {
        const auto w = testing::sample_window(seed);
        for (int trial = 0; trial < 50; ++trial) {
            auto [x, y] = testing::random_pair(rng, w, 1e-2, 5.0);
            auto a = chain_inequality_check(seed, x, y);
            auto b = chain_inequality_check(seed, y, x);
            CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-12));
            CHECK(a.mid == doctest::Approx(b.mid).epsilon(1e-12));
            CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-12));
        }
    }
}
