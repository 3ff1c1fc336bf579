/*
 * function_seed.hpp — candidate functions f on an interval (gamma, inf) and
 * the admissibility checks on their derivative:
 *
 *   (i)   f'(x) > 0                          (positivity)
 *   (ii)  x < y  =>  f'(x) < f'(y)           (strict increase)
 *   (iii) log f' is concave                  (log-concavity)
 *
 * Builtin seeds: "exp" on the whole line and "pow" (x^p, p > 1) on (0, inf).
 * Seeds with user-supplied evaluation maps are supported through the struct
 * itself; the maps must be pure and reentrant (the module never memoizes, so
 * concurrent evaluation is safe).
 *
 * Condition (iii) is verified as midpoint concavity over grid pairs; for a
 * continuous derivative this is equivalent to full concavity, and grid
 * verification is necessarily a sample of the continuum. Whether a seed is
 * admissible off-grid remains the caller's responsibility.
 *
 * chain_inequality_check reproduces the two-step inequality chain behind the
 * negative determinant of the two-point slope matrix:
 *
 *   (log f'(x) + log f'(y))/2  <=  int_0^1 log f'(tx + (1-t)y) dt
 *                              <   log int_0^1 f'(tx + (1-t)y) dt
 *
 * with the first step from log-concavity and the second (strict) from strict
 * concavity of log against a nonconstant integrand.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opmono/errors.hpp"

namespace opmono {

struct FunctionSeed {
    std::string name;
    std::vector<double> params;
    double gamma; // domain lower endpoint; -infinity for whole-line domains
    std::function<double(double)> f;
    std::function<double(double)> fprime;
};

// name "exp" (no parameters) or "pow" (params = {p}, requires p > 1; smaller
// exponents have a non-increasing derivative and throw AdmissibilityViolation).
FunctionSeed builtin_seed(const std::string& name, const std::vector<double>& params = {});

struct ConditionReport {
    bool positivity_ok = false;
    bool strict_increase_ok = false;
    bool log_concavity_ok = false;
    double positivity_margin = 0.0; // min f'(x) over the grid
    double increase_margin = 0.0;   // min f'(x_{k+1}) - f'(x_k)
    double concavity_margin = 0.0;  // min log f'(mid) - (log f'(x) + log f'(y))/2
    std::vector<double> failing_points;

    bool all_ok() const { return positivity_ok && strict_increase_ok && log_concavity_ok; }
};

// Checks (i)-(iii) on a sorted grid (>= 3 points, all > gamma). A grid point
// at or below gamma raises DomainError. Flags are all true iff failing_points
// is empty.
ConditionReport verify_conditions(const FunctionSeed& seed, const std::vector<double>& grid);

// Uniform grid of `points` values on [max(gamma + 0.01, -10), 10].
std::vector<double> default_verification_grid(const FunctionSeed& seed, int points = 64);

struct ChainCheck {
    double lhs; // (log f'(x) + log f'(y))/2
    double mid; // int_0^1 log f'(tx + (1-t)y) dt
    double rhs; // log int_0^1 f'(tx + (1-t)y) dt
    bool ok;    // lhs <= mid + 1e-12  and  mid < rhs - 1e-12
};

// Composite Simpson quadrature with `quad_points` subintervals (>= 16; odd
// counts are rounded up). Requires x != y, both > gamma.
ChainCheck chain_inequality_check(const FunctionSeed& seed, double x, double y,
                                  int quad_points = 256);

} // namespace opmono
