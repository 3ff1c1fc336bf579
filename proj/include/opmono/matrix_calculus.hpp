/*
 * matrix_calculus.hpp — matrix functions of Hermitian arguments via spectral
 * calculus, and their directional (Fréchet) derivative.
 *
 *   apply:    f(A) = U f(Lambda) U^H for A = U Lambda U^H
 *   frechet:  Df(A)[C] = U ( f^[1](Lambda) ∘ (U^H C U) ) U^H
 *
 * where f^[1] is the Loewner matrix of first divided differences
 *
 *   f^[1](x, y) = (f(x) - f(y)) / (x - y),     f^[1](x, x) = f'(x),
 *
 * and ∘ is the entrywise product. The quotient switches to the midpoint
 * derivative f'((x+y)/2) when |x - y| <= 1e-7 * max(1, |x|, |y|); at that
 * crossover the cancellation error of the quotient and the O(|x-y|^2) error
 * of the midpoint substitute are both negligible for smooth f.
 *
 * Domain policy: every eigenvalue must lie in (gamma, inf). Eigenvalues below
 * gamma by more than a relative slack raise SpectrumOutOfDomain; values within
 * the slack (roundoff of a boundary eigenvalue) are clamped to gamma before f
 * is evaluated, so matrices whose spectrum touches the endpoint exactly are
 * handled.
 */

#pragma once

#include "opmono/function_seed.hpp"
#include "opmono/hermitian.hpp"

namespace opmono {

struct LoewnerMatrix {
    int n = 0;
    std::vector<double> values; // row-major, symmetric; diagonal = f'(lambda_i)

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }
};

// First divided difference with the confluent midpoint fallback. Both points
// must be in the seed's domain (same boundary slack as apply); symmetric in
// (x, y).
double divided_difference(const FunctionSeed& seed, double x, double y);

// Loewner matrix over an eigenvalue list.
LoewnerMatrix loewner_matrix(const FunctionSeed& seed, const std::vector<double>& eigenvalues);

// f(A) through the full eigendecomposition. The result has eigenvalues
// f(lambda_i) in the same frame as A.
HermitianMatrix apply(const FunctionSeed& seed, const HermitianMatrix& A);

// Directional derivative of A |-> f(A) at A in the Hermitian direction C;
// linear in C, Hermitian (symmetrized to remove arithmetic drift), and
// covariant under unitary conjugation of (A, C).
HermitianMatrix frechet(const FunctionSeed& seed, const HermitianMatrix& A,
                        const HermitianMatrix& C);

namespace detail {
// Shared domain policy: throws SpectrumOutOfDomain if x < gamma - slack,
// otherwise returns x clamped up to gamma. `scale` sets the slack
// (1e-12 * max(1, |x|, |gamma|, scale)).
double clamp_to_domain(double x, double gamma, double scale);
} // namespace detail

} // namespace opmono
