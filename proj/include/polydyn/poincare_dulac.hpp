#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polydyn/spectrum.hpp"
#include "polydyn/truncated_map.hpp"

namespace polydyn {

/// Truncated linearizing conjugacy for a non-resonant contraction germ.
///
/// U lives in eigencoordinates and is normalized to U = id + h.o.t., which
/// pins the non-resonant jet uniquely. The change of coordinates that
/// satisfies Phi o f = Lambda o Phi on orbits is Phi = U o S^{-1}
/// (to_eigen_coords). residual is the max coefficient magnitude of
/// (U o f_tilde - Lambda o U) truncated at the jet order, where f_tilde is
/// f expressed in eigencoordinates; the order-by-order construction forces
/// it down to floating-point error.
struct LinearizationResult {
    TruncatedMap U;
    TruncatedMap U_inverse;                 // N-jet of U^{-1}
    std::vector<Complex> eigenvalues;       // Lambda diagonal
    DenseMatrix<Complex> eigenbasis;        // S, columns are eigenvectors
    DenseMatrix<Complex> eigenbasis_inverse;
    double residual = 0.0;
    double min_denominator = 0.0;           // min |alpha^m - alpha_i| used
    int min_denominator_order = 0;          // |m| where the minimum occurred
    int order = 0;
    double tol = 0.0;

    TruncatedMap to_eigen_coords() const { return U.precompose_linear(eigenbasis_inverse); }

    /// U pulled back to the original coordinates: S o U o S^{-1}. Also has
    /// identity linear part, and conjugates f to its own linear part D_0 f
    /// (rather than to the diagonal Lambda) up to the jet order.
    TruncatedMap to_original_coords() const {
        return U.precompose_linear(eigenbasis_inverse).apply_linear(eigenbasis);
    }
};

/// Order-by-order solution of the homological equations for
/// U o f_tilde = Lambda o U up to the jet order N. Works in any dimension
/// >= 1. Throws ResonanceError when the numeric spectrum is resonant
/// within the guard tolerance, EigenbasisError when the linear part is not
/// numerically diagonalizable, ParameterError when the spectrum is not a
/// contraction's (some |alpha_i| >= 1), and ConvergenceError when the
/// final residual exceeds tol.
LinearizationResult poincare_dulac(const ComplexMap& f, int N = 8, double tol = 1e-9);
LinearizationResult poincare_dulac(const RationalMap& f, int N = 8, double tol = 1e-9);

/// Dynamic check of the conjugacy on seeded sample orbits:
/// max over points and n <= n_max of sup|Phi(f^n(x)) - Lambda^n Phi(x)|.
struct LinearizationVerification {
    double max_deviation = 0.0;
    double residual_recheck = 0.0;
    bool linear_part_is_identity = false;
    int samples = 0;
    double radius = 0.0;
    int n_max = 0;
    uint64_t seed = 0;
    std::vector<std::string> notes;
};

LinearizationVerification verify_linearization(const RationalMap& f,
                                               const LinearizationResult& result,
                                               int samples, double radius, int n_max,
                                               uint64_t seed = 2024);
LinearizationVerification verify_linearization(const ComplexMap& f,
                                               const LinearizationResult& result,
                                               int samples, double radius, int n_max,
                                               uint64_t seed = 2024);

}  // namespace polydyn
