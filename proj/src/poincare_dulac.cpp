#include "polydyn/poincare_dulac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polydyn/jacobian.hpp"
#include "polydyn/resonance.hpp"
#include "polydyn/sampling.hpp"

namespace polydyn {

namespace {

constexpr double kResonanceGuardTol = 1e-10;

std::string witness_list(const ResonanceReport& rep) {
    std::ostringstream os;
    for (size_t w = 0; w < rep.witnesses.size() && w < 8; ++w) {
        const auto& wit = rep.witnesses[w];
        os << (w ? ", " : "") << "alpha_" << wit.target_index << " ~ alpha^(";
        for (size_t j = 0; j < wit.multi_index.size(); ++j)
            os << (j ? "," : "") << wit.multi_index[j];
        os << ")";
    }
    if (rep.witnesses.size() > 8) os << ", ...";
    return os.str();
}

}  // namespace

LinearizationResult poincare_dulac(const ComplexMap& f, int N, double tol) {
    if (N < 2) throw ParameterError("truncation order must be >= 2");
    const int d = f.dim();

    DenseMatrix<Complex> A = linear_part(f);  // NotOriginFixedError if f(0) != 0
    EigenDecomposition ed = eigen_decompose(A);
    if (!ed.diagonalizable)
        throw EigenbasisError("linear part is not numerically diagonalizable "
                              "(eigenbasis condition " +
                              double_str(ed.basis_condition) + ")");
    const std::vector<Complex>& alpha = ed.values;
    for (const auto& a : alpha)
        if (std::abs(a) >= 1.0)
            throw ParameterError("spectrum is not a contraction's: |alpha| = " +
                                 double_str(std::abs(a)) + " >= 1");

    ResonanceReport guard = check_resonance_numeric(alpha, N, kResonanceGuardTol);
    if (guard.resonant)
        throw ResonanceError("spectrum resonant within " +
                             double_str(kResonanceGuardTol) + " up to order " +
                             std::to_string(N) + ": " + witness_list(guard));

    DenseMatrix<Complex> S = ed.vectors;
    DenseMatrix<Complex> S_inv = inverse(S);

    // f in eigencoordinates: f_tilde = S^{-1} o f o S, truncated at N.
    TruncatedMap f_tilde =
        TruncatedMap::from_map(f, N).precompose_linear(S).apply_linear(S_inv);

    DenseMatrix<Complex> Lambda(d, d, Complex(0));
    for (int i = 0; i < d; ++i) Lambda.at(i, i) = alpha[static_cast<size_t>(i)];

    // Solve U o f_tilde = Lambda o U order by order: at order k the unknown
    // coefficient of x^m in U_i enters as (alpha^m - alpha_i) * c, and the
    // rest of the degree-k defect is already determined by lower orders.
    TruncatedMap U = TruncatedMap::identity(d, N);
    double min_denom = std::numeric_limits<double>::infinity();
    int min_denom_order = 0;
    for (int k = 2; k <= N; ++k) {
        TruncatedMap defect = U.compose(f_tilde) - U.apply_linear(Lambda);
        for (int i = 0; i < d; ++i) {
            ComplexPoly known = defect.comps[static_cast<size_t>(i)].homogeneous_part(k);
            for (const auto& [mono, coeff] : known.terms()) {
                Complex alpha_m(1, 0);
                for (int j = 0; j < d; ++j)
                    for (int e = 0; e < mono.exponent(j); ++e)
                        alpha_m *= alpha[static_cast<size_t>(j)];
                Complex denom = alpha_m - alpha[static_cast<size_t>(i)];
                double gap = std::abs(denom);
                if (gap < min_denom) {
                    min_denom = gap;
                    min_denom_order = k;
                }
                if (gap < kResonanceGuardTol)
                    throw ResonanceError("homological denominator |alpha^m - alpha_i| = " +
                                         double_str(gap) + " below guard at order " +
                                         std::to_string(k));
                U.comps[static_cast<size_t>(i)].add_term(mono, -coeff / denom);
            }
        }
    }

    LinearizationResult result{U,
                               jet_inverse(U),
                               alpha,
                               S,
                               S_inv,
                               0.0,
                               std::isfinite(min_denom) ? min_denom : 0.0,
                               min_denom_order,
                               N,
                               tol};
    result.residual =
        (U.compose(f_tilde) - U.apply_linear(Lambda)).max_coeff_magnitude();
    if (result.residual >= tol)
        throw ConvergenceError("linearization residual " + double_str(result.residual) +
                                   " not below tol " + double_str(tol),
                               result.residual);
    return result;
}

LinearizationResult poincare_dulac(const RationalMap& f, int N, double tol) {
    return poincare_dulac(to_complex(f), N, tol);
}

LinearizationVerification verify_linearization(const ComplexMap& f,
                                               const LinearizationResult& result,
                                               int samples, double radius, int n_max,
                                               uint64_t seed) {
    if (samples < 1) throw ParameterError("verification needs samples >= 1");
    if (n_max < 1) throw ParameterError("verification needs n_max >= 1");
    const int d = f.dim();

    LinearizationVerification v;
    v.samples = samples;
    v.radius = radius;
    v.n_max = n_max;
    v.seed = seed;
    v.linear_part_is_identity = result.U.linear_part_is_identity(1e-12);

    TruncatedMap phi = result.to_eigen_coords();
    std::vector<double> deviations(static_cast<size_t>(samples), 0.0);
    parallel_for(samples, [&](int idx) {
        std::vector<Complex> x =
            sample_polydisk_point(seed, static_cast<uint64_t>(idx), d, radius);
        std::vector<Complex> w = phi.evaluate(x);
        double dev = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            x = f.evaluate(x);
            for (int i = 0; i < d; ++i)
                w[static_cast<size_t>(i)] *= result.eigenvalues[static_cast<size_t>(i)];
            std::vector<Complex> lhs = phi.evaluate(x);
            for (int i = 0; i < d; ++i)
                dev = std::max(dev, std::abs(lhs[static_cast<size_t>(i)] -
                                             w[static_cast<size_t>(i)]));
        }
        deviations[static_cast<size_t>(idx)] = dev;
    });
    for (double dv : deviations) v.max_deviation = std::max(v.max_deviation, dv);

    // re-derive the residual from scratch rather than trusting the input
    TruncatedMap f_tilde = TruncatedMap::from_map(f, result.order)
                               .precompose_linear(result.eigenbasis)
                               .apply_linear(result.eigenbasis_inverse);
    DenseMatrix<Complex> Lambda(d, d, Complex(0));
    for (int i = 0; i < d; ++i) Lambda.at(i, i) = result.eigenvalues[static_cast<size_t>(i)];
    v.residual_recheck =
        (result.U.compose(f_tilde) - result.U.apply_linear(Lambda)).max_coeff_magnitude();

    if (!v.linear_part_is_identity)
        v.notes.push_back("degree-1 part of U deviates from the identity");
    return v;
}

LinearizationVerification verify_linearization(const RationalMap& f,
                                               const LinearizationResult& result,
                                               int samples, double radius, int n_max,
                                               uint64_t seed) {
    return verify_linearization(to_complex(f), result, samples, radius, n_max, seed);
}

}  // namespace polydyn
