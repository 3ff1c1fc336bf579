/*
 * centrality.hpp — deciding whether a Hermitian matrix is central (= a scalar
 * multiple of the identity, in the full matrix algebra) by testing local
 * monotonicity of an admissible function, and certifying the non-central case.
 *
 * For non-scalar A with spectral pair x = lambda_min < y = lambda_max and
 * orthonormal eigenvectors u, v, the 2x2 witness lifts to dimension n with
 *
 *   B = (u + v)(u + v)^H   (rank one, positive semidefinite),
 *   w = lambda u + mu v,
 *
 * giving A <= A + t0 B while f(A + t0 B) - f(A) has a negative eigenvalue.
 * Because span{u, v} is invariant under both A and B, the quadratic-form
 * margin delta at dimension n equals the 2x2 witness margin exactly; the
 * certificate stores the n-dimensional re-evaluation so that tests can pin
 * this dimension independence.
 *
 * "Numerically scalar" means spectral width <= 1e-9 * max(1, |lambda_max|);
 * below that width the witness margin would drown in roundoff, so such inputs
 * are classified Central by fiat.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opmono/function_seed.hpp"
#include "opmono/hermitian.hpp"
#include "opmono/witness.hpp"

namespace opmono {

// Scalarity threshold for a spectrum with largest eigenvalue lambda_max.
double central_tol(double lambda_max);

struct SpectralPair {
    double x; // lambda_min
    double y; // lambda_max
    std::vector<cplx> u;
    std::vector<cplx> v;
};

// Extremal spectral pair (maximizes |x - y|, which maximizes the witness
// margin). Throws NumericallyScalar when the width is at or below central_tol.
SpectralPair spectral_pair(const SpectralDecomposition& decomp);

struct ViolationCertificate {
    HermitianMatrix B;   // rank-one PSD perturbation
    double t0;           // step size, > 0
    std::vector<cplx> w; // unit witness vector
    double delta;        // <f(A) w, w> - <f(A + t0 B) w, w>, evaluated at dimension n
    double neg_eig;      // smallest eigenvalue of f(A + t0 B) - f(A)
    double x;            // spectral pair used
    double y;
};

enum class Verdict { Central, NonCentral };

struct CentralityVerdict {
    Verdict verdict;
    std::optional<ViolationCertificate> certificate; // present iff NonCentral
    double spectral_width;
};

// Central iff numerically scalar; otherwise constructs and re-verifies a
// violation certificate. Throws SpectrumOutOfDomain and propagates witness
// errors.
CentralityVerdict decide(const FunctionSeed& seed, const HermitianMatrix& A);

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> reasons;
};

// Independent recomputation (shares no state with decide):
//   1. min_eigenvalue(B) >= -1e-12,
//   2. min_eigenvalue(f(A + t0 B) - f(A)) < 0,
//   3. <(f(A) - f(A + t0 B)) w, w> matches delta within 1e-9.
// Never throws; failures come back as reasons.
CertificateCheck verify_certificate(const FunctionSeed& seed, const HermitianMatrix& A,
                                    const ViolationCertificate& cert);

// Order preservation on commuting pairs: requires ||AB - BA||_F small and
// A <= B (else NotCommuting / NotOrdered), returns whether
// min_eigenvalue(f(B) - f(A)) >= -1e-10. Expected true for any admissible seed.
bool monotone_commuting_check(const FunctionSeed& seed, const HermitianMatrix& A,
                              const HermitianMatrix& B);

} // namespace opmono
