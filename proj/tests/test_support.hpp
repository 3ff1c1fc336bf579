// Shared helpers for the test and acceptance suites: seed lists, sampling
// windows, and random instances with spectra placed inside a seed's domain.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "opmono/function_seed.hpp"
#include "opmono/hermitian.hpp"

namespace opmono::testing {

inline std::vector<FunctionSeed> builtin_test_seeds() {
    return {builtin_seed("exp"), builtin_seed("pow", {1.5}), builtin_seed("pow", {2.0}),
            builtin_seed("pow", {3.0})};
}

// Scalar sampling window comfortably inside the seed's domain.
struct Window {
    double lo;
    double hi;
};

inline Window sample_window(const FunctionSeed& seed) {
    if (std::isfinite(seed.gamma)) return {seed.gamma + 0.1, seed.gamma + 10.0};
    return {-10.0, 10.0};
}

// A pair (x, y) with x in the window, y = x + gap, gap in [min_gap, max_gap];
// both stay inside the seed's domain since windows are bounded below by it.
inline std::pair<double, double> random_pair(std::mt19937_64& rng, const Window& w,
                                             double min_gap, double max_gap) {
    std::uniform_real_distribution<double> ux(w.lo, w.hi);
    std::uniform_real_distribution<double> ug(min_gap, max_gap);
    const double x = ux(rng);
    return {x, x + ug(rng)};
}

// Random Hermitian instance adjusted for the seed's domain: centred, spectral
// width capped at `max_width`, and (for bounded-below domains) shifted so the
// smallest eigenvalue is gamma + 1.
inline HermitianMatrix random_in_domain(const FunctionSeed& seed, int n, std::uint64_t inst_seed,
                                        double max_width = 4.0) {
    HermitianMatrix a = random_hermitian(n, inst_seed);
    auto d = eigh(a);
    const double lo = d.eigenvalues.front(), hi = d.eigenvalues.back();
    const double width = hi - lo;
    if (width > max_width) a = (max_width / width) * a;
    d = eigh(a);
    const double mid = 0.5 * (d.eigenvalues.front() + d.eigenvalues.back());
    a = a - mid * HermitianMatrix::identity(n);
    if (std::isfinite(seed.gamma)) {
        const double shift = seed.gamma + 1.0 - (d.eigenvalues.front() - mid);
        a = a + shift * HermitianMatrix::identity(n);
    }
    return a;
}

inline double spectral_width(const HermitianMatrix& a) {
    auto d = eigh(a);
    return d.eigenvalues.back() - d.eigenvalues.front();
}

// Random PSD matrix with largest eigenvalue `scale`.
inline HermitianMatrix random_psd(int n, std::uint64_t seed, double scale = 1.0) {
    HermitianMatrix r = random_hermitian(n, seed);
    HermitianMatrix p = symmetrized(n, matmul(n, r.entries(), r.entries()));
    auto d = eigh(p);
    return (scale / std::max(d.eigenvalues.back(), 1e-300)) * p;
}

// Commuting ordered pair sharing a random eigenbasis, with eigenvalues of B
// dominating those of A entrywise. Spectra land in [lo, lo + 3].
inline std::pair<HermitianMatrix, HermitianMatrix> random_commuting_ordered(
    int n, std::uint64_t inst_seed, double lo) {
    const auto frame = eigh(random_hermitian(n, inst_seed)).frame;
    std::mt19937_64 rng(inst_seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> base(lo, lo + 2.0);
    std::uniform_real_distribution<double> gap(0.0, 1.0);
    std::vector<double> da(n), db(n);
    for (int i = 0; i < n; ++i) {
        da[i] = base(rng);
        db[i] = da[i] + gap(rng);
    }
    auto assemble = [&](const std::vector<double>& d) {
        std::vector<cplx> scaled(frame);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) scaled[static_cast<std::size_t>(i) * n + j] *= d[j];
        return symmetrized(n, matmul(n, scaled, adjoint(n, frame)));
    };
    return {assemble(da), assemble(db)};
}

} // namespace opmono::testing
