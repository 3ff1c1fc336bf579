#include "opmono/centrality.hpp"

#include <cmath>
#include <cstdio>

#include "opmono/matrix_calculus.hpp"

namespace opmono {

namespace {

constexpr double kPsdTol = 1e-12;
constexpr double kDeltaMatchTol = 1e-9;
constexpr double kMonotoneTol = 1e-10;

std::string format_msg(const char* fmt, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

} // namespace

double central_tol(double lambda_max) {
    return 1e-9 * std::max(1.0, std::abs(lambda_max));
}

SpectralPair spectral_pair(const SpectralDecomposition& decomp) {
    const double x = decomp.eigenvalues.front();
    const double y = decomp.eigenvalues.back();
    const double width = y - x;
    if (width <= central_tol(y))
        throw NumericallyScalar(
            format_msg("spectral_pair: width %.3e at or below scalarity threshold %.3e", width,
                       central_tol(y)),
            width);
    return {x, y, decomp.eigenvector(0), decomp.eigenvector(decomp.dim() - 1)};
}

CentralityVerdict decide(const FunctionSeed& seed, const HermitianMatrix& A) {
    const int n = A.dim();
    const auto d = eigh(A);
    // Domain gate up front; clamping itself happens inside apply().
    detail::clamp_to_domain(d.eigenvalues.front(), seed.gamma, A.frobenius_norm());

    const double width = d.eigenvalues.back() - d.eigenvalues.front();
    if (width <= central_tol(d.eigenvalues.back()))
        return {Verdict::Central, std::nullopt, width};

    const SpectralPair pair = spectral_pair(d);
    const Witness2x2 wit = witness_2x2(seed, pair.x, pair.y);

    // Embed the 2x2 model along the spectral pair.
    std::vector<cplx> sum(n), w(n);
    for (int i = 0; i < n; ++i) {
        sum[i] = pair.u[i] + pair.v[i];
        w[i] = wit.lambda * pair.u[i] + wit.mu * pair.v[i];
    }
    const HermitianMatrix B = rank_one(sum);

    // Re-verify at dimension n by direct evaluation.
    const HermitianMatrix f0 = apply(seed, A);
    const HermitianMatrix f1 = apply(seed, A + wit.t0 * B);
    const double neg_eig = min_eigenvalue(f1 - f0);
    const double delta_n = quadratic_form(f0, w) - quadratic_form(f1, w);
    if (!(delta_n > 0.0))
        throw WitnessSearchFailed(format_msg(
            "decide: embedded margin %.3e not positive (2x2 margin %.3e); input is too close "
            "to scalar for a certified violation",
            delta_n, wit.delta));

    ViolationCertificate cert{B, wit.t0, std::move(w), delta_n, neg_eig, wit.x, wit.y};
    return {Verdict::NonCentral, std::move(cert), width};
}

CertificateCheck verify_certificate(const FunctionSeed& seed, const HermitianMatrix& A,
                                    const ViolationCertificate& cert) {
    CertificateCheck out;
    const auto fail = [&out](std::string reason) {
        out.ok = false;
        out.reasons.push_back(std::move(reason));
    };

    if (cert.B.dim() != A.dim() || cert.w.size() != static_cast<std::size_t>(A.dim())) {
        fail("certificate dimensions do not match the matrix");
        return out;
    }
    try {
        if (min_eigenvalue(cert.B) < -kPsdTol)
            fail(format_msg("perturbation B is not positive semidefinite "
                            "(min eigenvalue %.3e < %.3e)",
                            min_eigenvalue(cert.B), -kPsdTol));

        const HermitianMatrix f0 = apply(seed, A);
        const HermitianMatrix f1 = apply(seed, A + cert.t0 * cert.B);
        const double neg = min_eigenvalue(f1 - f0);
        if (!(neg < 0.0))
            fail(format_msg("f(A + t0 B) - f(A) has no negative eigenvalue "
                            "(min eigenvalue %.3e, t0 %.3e)",
                            neg, cert.t0));

        const double margin = quadratic_form(f0, cert.w) - quadratic_form(f1, cert.w);
        if (std::abs(margin - cert.delta) > kDeltaMatchTol)
            fail(format_msg("recomputed margin %.17g does not match certificate delta %.17g",
                            margin, cert.delta));
    } catch (const Error& e) {
        fail(std::string("evaluation failed: ") + e.what());
    }
    return out;
}

bool monotone_commuting_check(const FunctionSeed& seed, const HermitianMatrix& A,
                              const HermitianMatrix& B) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("monotone_commuting_check: dimension mismatch");
    const double comm = commutator_norm(A, B);
    const double comm_tol = 1e-10 * A.frobenius_norm() * B.frobenius_norm();
    if (comm > comm_tol)
        throw NotCommuting(
            format_msg("monotone_commuting_check: ||AB - BA||_F = %.3e exceeds %.3e", comm,
                       comm_tol));
    const double order = min_eigenvalue(B - A);
    if (order < -kMonotoneTol)
        throw NotOrdered(format_msg(
            "monotone_commuting_check: B - A has eigenvalue %.3e below %.3e", order,
            -kMonotoneTol));
    return min_eigenvalue(apply(seed, B) - apply(seed, A)) >= -kMonotoneTol;
}

} // namespace opmono
