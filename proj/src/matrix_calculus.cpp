#include "opmono/matrix_calculus.hpp"

#include <cmath>
#include <cstdio>

namespace opmono {

namespace {

constexpr double kDDThreshold = 1e-7;

std::size_t idx(int n, int i, int j) {
    return static_cast<std::size_t>(i) * n + j;
}

std::vector<double> clamped_spectrum(const FunctionSeed& seed,
                                     const std::vector<double>& eigenvalues, double scale) {
    std::vector<double> lam(eigenvalues);
    for (double& x : lam) x = detail::clamp_to_domain(x, seed.gamma, scale);
    return lam;
}

} // namespace

namespace detail {

double clamp_to_domain(double x, double gamma, double scale) {
    if (!std::isfinite(gamma)) return x; // whole-line domain
    const double slack =
        1e-12 * std::max({1.0, std::abs(x), std::abs(gamma), std::abs(scale)});
    if (x < gamma - slack) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "spectrum point %.17g lies below the domain endpoint %.17g", x, gamma);
        throw SpectrumOutOfDomain(buf, x, gamma);
    }
    return std::max(x, gamma);
}

} // namespace detail

double divided_difference(const FunctionSeed& seed, double x, double y) {
    x = detail::clamp_to_domain(x, seed.gamma, std::abs(x));
    y = detail::clamp_to_domain(y, seed.gamma, std::abs(y));
    if (std::abs(x - y) > kDDThreshold * std::max({1.0, std::abs(x), std::abs(y)}))
        return (seed.f(x) - seed.f(y)) / (x - y);
    return seed.fprime(0.5 * (x + y));
}

LoewnerMatrix loewner_matrix(const FunctionSeed& seed, const std::vector<double>& eigenvalues) {
    const int n = static_cast<int>(eigenvalues.size());
    LoewnerMatrix L;
    L.n = n;
    L.values.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        L.values[idx(n, i, i)] = seed.fprime(eigenvalues[i]);
        for (int j = i + 1; j < n; ++j) {
            const double d = divided_difference(seed, eigenvalues[i], eigenvalues[j]);
            L.values[idx(n, i, j)] = d;
            L.values[idx(n, j, i)] = d;
        }
    }
    return L;
}

HermitianMatrix apply(const FunctionSeed& seed, const HermitianMatrix& A) {
    const int n = A.dim();
    const auto d = eigh(A);
    const auto lam = clamped_spectrum(seed, d.eigenvalues, A.frobenius_norm());

    std::vector<double> flam(n);
    for (int i = 0; i < n; ++i) flam[i] = seed.f(lam[i]);

    // U f(Lambda) U^H
    std::vector<cplx> scaled(d.frame);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled[idx(n, i, j)] *= flam[j];
    return symmetrized(n, matmul(n, scaled, adjoint(n, d.frame)));
}

HermitianMatrix frechet(const FunctionSeed& seed, const HermitianMatrix& A,
                        const HermitianMatrix& C) {
    if (A.dim() != C.dim()) throw DimensionMismatch("frechet: A and C dimensions differ");
    const int n = A.dim();
    const auto d = eigh(A);
    const auto lam = clamped_spectrum(seed, d.eigenvalues, A.frobenius_norm());
    const LoewnerMatrix L = loewner_matrix(seed, lam);

    // U ( L ∘ (U^H C U) ) U^H
    std::vector<cplx> m = matmul(n, adjoint(n, d.frame), matmul(n, C.entries(), d.frame));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[idx(n, i, j)] *= L.at(i, j);
    return symmetrized(n, matmul(n, d.frame, matmul(n, m, adjoint(n, d.frame))));
}

} // namespace opmono
