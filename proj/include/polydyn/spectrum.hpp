#pragma once

#include <vector>

#include "polydyn/matrix.hpp"
#include "polydyn/rational.hpp"

namespace polydyn {

/// Numeric eigendecomposition of a complex d x d matrix.
///
/// Eigenpairs come back in a fixed deterministic order (descending |value|,
/// ties by descending real then imaginary part) with eigenvectors scaled to
/// unit Euclidean norm and first significant entry positive real. The
/// antidiagonal 2-block + diagonal pattern of the gamma family's linear
/// part is special-cased to the closed form {+sqrt(ab), -sqrt(ab),
/// diagonal entries}; everything else goes through a general solver.
struct EigenDecomposition {
    std::vector<Complex> values;
    DenseMatrix<Complex> vectors;      // columns aligned with values
    bool diagonalizable = false;       // eigenbasis numerically invertible
    double basis_condition = 0.0;      // 2-norm condition estimate of the basis
};

EigenDecomposition eigen_decompose(const DenseMatrix<Complex>& A);

double spectral_radius(const DenseMatrix<Complex>& A);

// Small dense complex helpers (d <= a handful, clarity over speed).
DenseMatrix<Complex> matmul(const DenseMatrix<Complex>& A, const DenseMatrix<Complex>& B);
std::vector<Complex> matvec(const DenseMatrix<Complex>& A, const std::vector<Complex>& x);
DenseMatrix<Complex> inverse(const DenseMatrix<Complex>& A);

}  // namespace polydyn
