#pragma once

#include "mimo/complex_matrix.hpp"

namespace mimo {

// Raised when a Cholesky factorization meets a non-positive pivot. The index
// (1-based) names the first leading principal minor that is not positive.
struct FactorizationError : std::runtime_error {
    FactorizationError(const std::string& msg, std::size_t minor)
        : std::runtime_error(msg), leading_minor(minor) {}
    std::size_t leading_minor;
};

struct RankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigResult {
    RealVector eigenvalues;      // sorted descending
    ComplexMatrix eigenvectors;  // unitary; column k pairs with eigenvalues[k]
};

struct QrResult {
    ComplexMatrix q;  // orthonormal columns, rows(A) x cols(A)
    ComplexMatrix r;  // upper triangular, real positive diagonal
};

struct SvdResult {
    ComplexMatrix u;
    RealVector singular_values;  // descending
    ComplexMatrix v;             // A = U diag(s) V^H
};

// Spectral decomposition of a Hermitian matrix. The input is symmetrized as
// (A + A^H)/2 to absorb round-off, but must be Hermitian within 1e-10 relative.
EigResult hermitian_eig(const ComplexMatrix& a);

// A = L L^H with L lower triangular and real positive diagonal. Throws
// FactorizationError on inputs that are not positive definite.
ComplexMatrix cholesky_lower(const ComplexMatrix& a);

// Thin QR with the R diagonal normalized real positive, which makes the
// factorization of a full-column-rank input unique.
QrResult qr_positive(const ComplexMatrix& a);

SvdResult svd(const ComplexMatrix& a);

RealVector singular_values(const ComplexMatrix& a);

// For a nonsingular K x K input, returns a unitary V such that the R factor of
// qr_positive(A * V) has all diagonal entries equal to |det(A)|^(1/K), the
// geometric mean of the singular values.
ComplexMatrix gmd_rotation(const ComplexMatrix& a);

// Inverse of a Hermitian positive definite matrix, via Cholesky.
ComplexMatrix hpd_inverse(const ComplexMatrix& a);

// Inverse of a lower triangular matrix by forward substitution.
ComplexMatrix lower_triangular_inverse(const ComplexMatrix& l);

// log(det(A)) for Hermitian positive definite A, via Cholesky.
double hpd_log_det(const ComplexMatrix& a);

}  // namespace mimo
