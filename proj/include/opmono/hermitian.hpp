/*
 * hermitian.hpp — complex Hermitian matrices and their spectral calculus
 * backbone.
 *
 * Conventions:
 *   - Entries are stored row-major; A(i,j) = conj(A(j,i)) always holds
 *     exactly after construction.
 *   - eigh() returns eigenvalues in nondecreasing order together with a
 *     unitary frame whose column j is an eigenvector for eigenvalue j,
 *     so A = U diag(lambda) U^H.
 *   - The semidefinite (Loewner) order "A <= B" is decided through
 *     min_eigenvalue(B - A) >= 0, up to the caller's tolerance.
 *
 * The eigensolver is a cyclic Jacobi iteration with exact 2x2 unitary
 * diagonalization of each pivot block. It converges when the off-diagonal
 * Frobenius norm drops below 1e-12 * ||A||_F, with a hard cap of 30 sweeps.
 * Intended scale is n up to a few hundred.
 *
 * All types are immutable after construction and all operations are pure;
 * concurrent use from multiple threads is safe.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "opmono/errors.hpp"

namespace opmono {

using cplx = std::complex<double>;

class HermitianMatrix {
public:
    HermitianMatrix() = default;

    // Validates that `entries` (row-major, n*n) is Hermitian within
    // 1e-12 * max|entry|, then symmetrizes exactly: A <- (A + A^H)/2 with
    // the diagonal imaginary parts dropped. Throws NotHermitian otherwise.
    static HermitianMatrix from_entries(int n, std::vector<cplx> entries);

    static HermitianMatrix zero(int n);
    static HermitianMatrix identity(int n);

    int dim() const { return n_; }
    const cplx& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }
    const std::vector<cplx>& entries() const { return a_; }

    double frobenius_norm() const;

private:
    HermitianMatrix(int n, std::vector<cplx> a) : n_(n), a_(std::move(a)) {}

    int n_ = 0;
    std::vector<cplx> a_;
};

struct SpectralDecomposition {
    std::vector<double> eigenvalues; // nondecreasing
    std::vector<cplx> frame;         // row-major n*n unitary; column j = eigenvector j

    int dim() const { return static_cast<int>(eigenvalues.size()); }
    cplx frame_at(int i, int j) const {
        return frame[static_cast<std::size_t>(i) * eigenvalues.size() + j];
    }
    std::vector<cplx> eigenvector(int j) const;

    // ||U^H U - I||_F, for diagnostics and tests.
    double unitarity_residual() const;
    // U diag(lambda) U^H.
    HermitianMatrix reconstruct() const;
};

// Cyclic Jacobi eigendecomposition. Deterministic for fixed input.
// Throws EighNoConvergence (carrying the residual) after 30 sweeps.
SpectralDecomposition eigh(const HermitianMatrix& A);

// Smallest eigenvalue; >= 0 (up to tolerance) iff A is positive semidefinite.
double min_eigenvalue(const HermitianMatrix& A);

// (G + G^H)/2 with G filled by independent N(0, spread^2) real and imaginary
// parts from a fixed-seed generator; identical (n, seed, spread) give
// identical matrices.
HermitianMatrix random_hermitian(int n, std::uint64_t seed, double spread = 1.0);

// -- arithmetic (all results exactly Hermitian) ------------------------------

HermitianMatrix operator+(const HermitianMatrix& A, const HermitianMatrix& B);
HermitianMatrix operator-(const HermitianMatrix& A, const HermitianMatrix& B);
HermitianMatrix operator*(double s, const HermitianMatrix& A);

// v v^H (rank one, positive semidefinite).
HermitianMatrix rank_one(const std::vector<cplx>& v);

std::vector<cplx> matvec(const HermitianMatrix& A, const std::vector<cplx>& w);

// Re <A w, w>; the imaginary part vanishes for Hermitian A.
double quadratic_form(const HermitianMatrix& A, const std::vector<cplx>& w);

// ||A B - B A||_F.
double commutator_norm(const HermitianMatrix& A, const HermitianMatrix& B);

// -- raw row-major complex helpers (shared by the calculus layer and tests) --

std::vector<cplx> matmul(int n, const std::vector<cplx>& X, const std::vector<cplx>& Y);
std::vector<cplx> adjoint(int n, const std::vector<cplx>& X);
double frobenius_norm(int n, const std::vector<cplx>& X);

// (X + X^H)/2 as a HermitianMatrix, for products that are Hermitian up to
// arithmetic drift (e.g. U D U^H chains).
HermitianMatrix symmetrized(int n, const std::vector<cplx>& X);

} // namespace opmono
