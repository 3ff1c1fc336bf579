/*
 * witness.hpp — constructive order-violation witnesses in the 2x2 model.
 *
 * Model: A = diag(x, y) with x != y in the seed's domain, B the all-ones
 * matrix (the rank-one projector onto u + v scaled to (u+v)(u+v)^H in the
 * standard basis), and w = (lambda, mu) a unit vector. The directional
 * derivative of t |-> f(A + tB) at t = 0 is the two-point slope matrix
 *
 *   L = [[ f'(x),          f^[1](x, y) ],
 *        [ f^[1](x, y),    f'(y)       ]]
 *
 * whose determinant f'(x) f'(y) - f^[1](x, y)^2 is strictly negative for
 * every admissible seed: by log-concavity and strict increase of f',
 *
 *   log f'(x) + log f'(y)  <  2 log int_0^1 f'(tx + (1-t)y) dt
 *                          =  2 log f^[1](x, y).
 *
 * Hence L has a negative eigenvalue; along its eigenvector w the quadratic
 * form <f(A + tB) w, w> initially decreases, so some step t0 > 0 gives a
 * positive margin
 *
 *   delta = <f(A) w, w> - <f(A + t0 B) w, w> > 0,
 *
 * certifying that A <= A + t0 B while f(A) <= f(A + t0 B) fails. Conversely,
 * with x = y the base point is scalar, commutes with B, and no such (t, w)
 * exists; witness construction for a degenerate pair is an error.
 *
 * The step search is a geometric descent t_init * 2^-k (k = 0..60,
 * t_init = max(|x - y|, 1)); the slope <L w, w> < 0 guarantees a sign change
 * on the ladder. The accepted step is then refined on a 33-point geometric
 * grid over [t0/2, 2 t0], keeping the margin-maximizing point. Any delta > 0
 * certifies; the refinement only improves numerical headroom downstream.
 */

#pragma once

#include <complex>

#include "opmono/function_seed.hpp"
#include "opmono/hermitian.hpp"

namespace opmono {

struct SymMatrix2 {
    double xx = 0.0; // (0,0)
    double xy = 0.0; // (0,1) = (1,0)
    double yy = 0.0; // (1,1)

    double det() const { return xx * yy - xy * xy; }
};

// The two-point slope matrix L above. Throws DegeneratePair when x == y.
SymMatrix2 build_L(const FunctionSeed& seed, double x, double y);

struct NegativeDirection {
    cplx lambda;
    cplx mu;
    double eigenvalue; // smallest eigenvalue of L, < 0
};

// Closed-form smallest eigenpair of a real symmetric 2x2 matrix. The
// eigenvector is normalized so its largest-magnitude component is real and
// positive (reproducible output). Throws NoNegativeDirection when the
// smallest eigenvalue is >= -1e-14.
NegativeDirection negative_direction(const SymMatrix2& L);

struct StepResult {
    double t0;
    double delta;
};

// Geometric step search described above; (lambda, mu) must be a unit vector.
// Throws WitnessSearchFailed if no grid point yields a positive margin.
StepResult find_t0(const FunctionSeed& seed, double x, double y, cplx lambda, cplx mu);

struct Witness2x2 {
    double x;
    double y;
    cplx lambda;
    cplx mu;
    double t0;
    double delta;
    double L_det;
};

// build_L -> negative_direction -> find_t0.
Witness2x2 witness_2x2(const FunctionSeed& seed, double x, double y);

} // namespace opmono
