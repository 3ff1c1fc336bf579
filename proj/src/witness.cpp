#include "opmono/witness.hpp"

#include <cmath>
#include <cstdio>

#include "opmono/matrix_calculus.hpp"

namespace opmono {

namespace {

constexpr double kNegDirTol = 1e-14;
constexpr int kLadderLevels = 61;  // t_init * 2^-k, k = 0..60
constexpr int kRefinePoints = 33;  // geometric grid over [t0/2, 2 t0]

HermitianMatrix model_base(double x, double y) {
    return HermitianMatrix::from_entries(2, {cplx(x), cplx(0.0), cplx(0.0), cplx(y)});
}

HermitianMatrix model_perturbation() {
    return HermitianMatrix::from_entries(2, {cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)});
}

} // namespace

SymMatrix2 build_L(const FunctionSeed& seed, double x, double y) {
    if (x == y) throw DegeneratePair("build_L: witness construction requires x != y");
    x = detail::clamp_to_domain(x, seed.gamma, std::abs(y));
    y = detail::clamp_to_domain(y, seed.gamma, std::abs(x));
    return {seed.fprime(x), divided_difference(seed, x, y), seed.fprime(y)};
}

NegativeDirection negative_direction(const SymMatrix2& L) {
    const double h = 0.5 * (L.xx - L.yy);
    const double m = 0.5 * (L.xx + L.yy);
    const double r = std::hypot(h, L.xy);
    const double eig = m - r;
    if (eig >= -kNegDirTol) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "negative_direction: smallest eigenvalue %.3e is not negative", eig);
        throw NoNegativeDirection(buf, eig);
    }

    // Cancellation-free eigenvector representation, as in the eigensolver.
    double v0, v1;
    if (h >= 0.0) {
        v0 = L.xy;
        v1 = -(h + r);
    } else {
        v0 = h - r;
        v1 = L.xy;
    }
    const double nrm = std::hypot(v0, v1);
    v0 /= nrm;
    v1 /= nrm;
    // Largest-magnitude component real and positive; ties favor the first.
    if ((std::abs(v0) >= std::abs(v1) && v0 < 0.0) || (std::abs(v0) < std::abs(v1) && v1 < 0.0)) {
        v0 = -v0;
        v1 = -v1;
    }
    return {cplx(v0), cplx(v1), eig};
}

StepResult find_t0(const FunctionSeed& seed, double x, double y, cplx lambda, cplx mu) {
    x = detail::clamp_to_domain(x, seed.gamma, std::abs(y));
    y = detail::clamp_to_domain(y, seed.gamma, std::abs(x));
    const double unit = std::norm(lambda) + std::norm(mu);
    if (std::abs(unit - 1.0) > 1e-12)
        throw std::invalid_argument("find_t0: (lambda, mu) must be a unit vector");

    const HermitianMatrix A = model_base(x, y);
    const HermitianMatrix B = model_perturbation();
    const std::vector<cplx> w = {lambda, mu};
    const double base_form = quadratic_form(apply(seed, A), w);

    const auto margin = [&](double t) {
        return base_form - quadratic_form(apply(seed, A + t * B), w);
    };

    const double t_init = std::max(std::abs(x - y), 1.0);
    double t0 = 0.0, delta = 0.0;
    bool found = false;
    for (int k = 0; k < kLadderLevels; ++k) {
        const double t = std::ldexp(t_init, -k);
        const double d = margin(t);
        if (d > 0.0) {
            t0 = t;
            delta = d;
            found = true;
            break;
        }
    }
    if (!found)
        throw WitnessSearchFailed(
            "find_t0: no step on the geometric ladder produced a positive margin");

    // Refinement around the accepted step; the grid contains t0 itself.
    StepResult best{t0, delta};
    for (int i = 0; i < kRefinePoints; ++i) {
        const double t = 0.5 * t0 * std::pow(4.0, static_cast<double>(i) / (kRefinePoints - 1));
        const double d = margin(t);
        if (d > best.delta) best = {t, d};
    }
    return best;
}

Witness2x2 witness_2x2(const FunctionSeed& seed, double x, double y) {
    const SymMatrix2 L = build_L(seed, x, y);
    const NegativeDirection dir = negative_direction(L);
    const double cx = detail::clamp_to_domain(x, seed.gamma, std::abs(y));
    const double cy = detail::clamp_to_domain(y, seed.gamma, std::abs(x));
    const StepResult step = find_t0(seed, cx, cy, dir.lambda, dir.mu);
    return {cx, cy, dir.lambda, dir.mu, step.t0, step.delta, L.det()};
}

} // namespace opmono
