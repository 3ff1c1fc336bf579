#include "opmono/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

namespace opmono {

namespace {

constexpr double kConstructionTol = 1e-12; // relative to max|entry|
constexpr double kJacobiTol = 1e-12;       // relative to ||A||_F
constexpr int kMaxSweeps = 30;

std::size_t idx(int n, int i, int j) {
    return static_cast<std::size_t>(i) * n + j;
}

std::string format_msg(const char* fmt, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

// Off-diagonal Frobenius norm of a row-major n*n matrix.
double offdiag_norm(int n, const std::vector<cplx>& a) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a[idx(n, i, j)]);
    return std::sqrt(s);
}

} // namespace

HermitianMatrix HermitianMatrix::from_entries(int n, std::vector<cplx> entries) {
    if (n < 1) throw std::invalid_argument("HermitianMatrix: dimension must be >= 1");
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("HermitianMatrix: entry count does not match dimension");

    double max_abs = 0.0;
    for (const auto& e : entries) max_abs = std::max(max_abs, std::abs(e));

    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            worst = std::max(worst,
                             std::abs(entries[idx(n, i, j)] - std::conj(entries[idx(n, j, i)])));
    if (worst > kConstructionTol * max_abs)
        throw NotHermitian(format_msg(
            "HermitianMatrix: asymmetry %.3e exceeds tolerance %.3e", worst,
            kConstructionTol * max_abs));

    // Symmetrize exactly; removes asymmetry accumulated by upstream arithmetic.
    for (int i = 0; i < n; ++i) {
        entries[idx(n, i, i)] = cplx(entries[idx(n, i, i)].real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            cplx m = 0.5 * (entries[idx(n, i, j)] + std::conj(entries[idx(n, j, i)]));
            entries[idx(n, i, j)] = m;
            entries[idx(n, j, i)] = std::conj(m);
        }
    }
    return HermitianMatrix(n, std::move(entries));
}

HermitianMatrix HermitianMatrix::zero(int n) {
    return from_entries(n, std::vector<cplx>(static_cast<std::size_t>(n) * n));
}

HermitianMatrix HermitianMatrix::identity(int n) {
    std::vector<cplx> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) a[idx(n, i, i)] = 1.0;
    return from_entries(n, std::move(a));
}

double HermitianMatrix::frobenius_norm() const {
    return opmono::frobenius_norm(n_, a_);
}

std::vector<cplx> SpectralDecomposition::eigenvector(int j) const {
    int n = dim();
    std::vector<cplx> v(n);
    for (int i = 0; i < n; ++i) v[i] = frame_at(i, j);
    return v;
}

double SpectralDecomposition::unitarity_residual() const {
    int n = dim();
    std::vector<cplx> g = matmul(n, adjoint(n, frame), frame);
    for (int i = 0; i < n; ++i) g[idx(n, i, i)] -= 1.0;
    return opmono::frobenius_norm(n, g);
}

HermitianMatrix SpectralDecomposition::reconstruct() const {
    int n = dim();
    std::vector<cplx> scaled(frame);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled[idx(n, i, j)] *= eigenvalues[j];
    return symmetrized(n, matmul(n, scaled, adjoint(n, frame)));
}

SpectralDecomposition eigh(const HermitianMatrix& A) {
    const int n = A.dim();
    std::vector<cplx> a = A.entries();
    std::vector<cplx> v(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) v[idx(n, i, i)] = 1.0;

    const double target = kJacobiTol * A.frobenius_norm();
    // Entries below this cannot push the off-diagonal norm past the target.
    const double skip = target / (2.0 * n);

    double off = offdiag_norm(n, a);
    int sweep = 0;
    while (off > target) {
        if (sweep++ >= kMaxSweeps)
            throw EighNoConvergence(
                format_msg("eigh: off-diagonal residual %.3e above target %.3e after 30 sweeps",
                           off, target),
                off);
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx beta = a[idx(n, p, q)];
                if (std::abs(beta) <= skip) continue;

                // Exact eigenbasis of the 2x2 pivot block [[alpha, beta], [conj(beta), gamma]].
                const double alpha = a[idx(n, p, p)].real();
                const double gamma = a[idx(n, q, q)].real();
                const double h = 0.5 * (alpha - gamma);
                const double m = 0.5 * (alpha + gamma);
                const double r = std::hypot(h, std::abs(beta));
                const double lam1 = m - r;
                const double lam2 = m + r;

                // Pick the representation whose second factor avoids cancellation.
                cplx e0, e1;
                if (h >= 0.0) {
                    e0 = beta;
                    e1 = cplx(-(h + r), 0.0);
                } else {
                    e0 = cplx(h - r, 0.0);
                    e1 = std::conj(beta);
                }
                const double nrm = std::sqrt(std::norm(e0) + std::norm(e1));
                const cplx u00 = e0 / nrm, u10 = e1 / nrm;   // eigenvector for lam1
                const cplx u01 = -std::conj(u10), u11 = std::conj(u00); // for lam2

                // A <- A * U (columns p, q)
                for (int i = 0; i < n; ++i) {
                    const cplx ap = a[idx(n, i, p)], aq = a[idx(n, i, q)];
                    a[idx(n, i, p)] = ap * u00 + aq * u10;
                    a[idx(n, i, q)] = ap * u01 + aq * u11;
                }
                // A <- U^H * A (rows p, q)
                for (int j = 0; j < n; ++j) {
                    const cplx ap = a[idx(n, p, j)], aq = a[idx(n, q, j)];
                    a[idx(n, p, j)] = std::conj(u00) * ap + std::conj(u10) * aq;
                    a[idx(n, q, j)] = std::conj(u01) * ap + std::conj(u11) * aq;
                }
                // The pivot block is diagonalized exactly.
                a[idx(n, p, p)] = lam1;
                a[idx(n, q, q)] = lam2;
                a[idx(n, p, q)] = 0.0;
                a[idx(n, q, p)] = 0.0;

                // V <- V * U
                for (int i = 0; i < n; ++i) {
                    const cplx vp = v[idx(n, i, p)], vq = v[idx(n, i, q)];
                    v[idx(n, i, p)] = vp * u00 + vq * u10;
                    v[idx(n, i, q)] = vp * u01 + vq * u11;
                }
            }
        }
        off = offdiag_norm(n, a);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[idx(n, i, i)].real() < a[idx(n, j, j)].real();
    });

    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.frame.resize(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        d.eigenvalues[j] = a[idx(n, order[j], order[j])].real();
        for (int i = 0; i < n; ++i) d.frame[idx(n, i, j)] = v[idx(n, i, order[j])];
    }
    return d;
}

double min_eigenvalue(const HermitianMatrix& A) {
    return eigh(A).eigenvalues.front();
}

HermitianMatrix random_hermitian(int n, std::uint64_t seed, double spread) {
    if (n < 1) throw std::invalid_argument("random_hermitian: dimension must be >= 1");
    if (!(spread > 0.0)) throw std::invalid_argument("random_hermitian: spread must be positive");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> g(static_cast<std::size_t>(n) * n);
    for (auto& e : g) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        e = cplx(spread * re, spread * im);
    }
    std::vector<cplx> h(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h[idx(n, i, j)] = 0.5 * (g[idx(n, i, j)] + std::conj(g[idx(n, j, i)]));
    return HermitianMatrix::from_entries(n, std::move(h));
}

HermitianMatrix operator+(const HermitianMatrix& A, const HermitianMatrix& B) {
    if (A.dim() != B.dim()) throw DimensionMismatch("operator+: dimension mismatch");
    std::vector<cplx> c(A.entries());
    const auto& b = B.entries();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
    return HermitianMatrix::from_entries(A.dim(), std::move(c));
}

HermitianMatrix operator-(const HermitianMatrix& A, const HermitianMatrix& B) {
    if (A.dim() != B.dim()) throw DimensionMismatch("operator-: dimension mismatch");
    std::vector<cplx> c(A.entries());
    const auto& b = B.entries();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b[k];
    return HermitianMatrix::from_entries(A.dim(), std::move(c));
}

HermitianMatrix operator*(double s, const HermitianMatrix& A) {
    std::vector<cplx> c(A.entries());
    for (auto& e : c) e *= s;
    return HermitianMatrix::from_entries(A.dim(), std::move(c));
}

HermitianMatrix rank_one(const std::vector<cplx>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<cplx> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[idx(n, i, j)] = v[i] * std::conj(v[j]);
    return HermitianMatrix::from_entries(n, std::move(a));
}

std::vector<cplx> matvec(const HermitianMatrix& A, const std::vector<cplx>& w) {
    const int n = A.dim();
    if (w.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("matvec: vector length does not match matrix dimension");
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < n; ++j) s += A(i, j) * w[j];
        out[i] = s;
    }
    return out;
}

double quadratic_form(const HermitianMatrix& A, const std::vector<cplx>& w) {
    const std::vector<cplx> aw = matvec(A, w);
    cplx s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += aw[i] * std::conj(w[i]);
    return s.real();
}

double commutator_norm(const HermitianMatrix& A, const HermitianMatrix& B) {
    if (A.dim() != B.dim()) throw DimensionMismatch("commutator_norm: dimension mismatch");
    const int n = A.dim();
    std::vector<cplx> ab = matmul(n, A.entries(), B.entries());
    std::vector<cplx> ba = matmul(n, B.entries(), A.entries());
    for (std::size_t k = 0; k < ab.size(); ++k) ab[k] -= ba[k];
    return frobenius_norm(n, ab);
}

std::vector<cplx> matmul(int n, const std::vector<cplx>& X, const std::vector<cplx>& Y) {
    std::vector<cplx> z(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx x = X[idx(n, i, k)];
            if (x == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) z[idx(n, i, j)] += x * Y[idx(n, k, j)];
        }
    return z;
}

std::vector<cplx> adjoint(int n, const std::vector<cplx>& X) {
    std::vector<cplx> z(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z[idx(n, j, i)] = std::conj(X[idx(n, i, j)]);
    return z;
}

double frobenius_norm(int n, const std::vector<cplx>& X) {
    double s = 0.0;
    for (int i = 0; i < n * n; ++i) s += std::norm(X[i]);
    return std::sqrt(s);
}

HermitianMatrix symmetrized(int n, const std::vector<cplx>& X) {
    std::vector<cplx> h(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h[idx(n, i, j)] = 0.5 * (X[idx(n, i, j)] + std::conj(X[idx(n, j, i)]));
    return HermitianMatrix::from_entries(n, std::move(h));
}

} // namespace opmono
