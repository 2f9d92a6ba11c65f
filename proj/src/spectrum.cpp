#include "polydyn/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace polydyn {

namespace {

Eigen::MatrixXcd to_eigen(const DenseMatrix<Complex>& A) {
    Eigen::MatrixXcd M(A.rows(), A.cols());
    for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c) M(r, c) = A.at(r, c);
    return M;
}

DenseMatrix<Complex> from_eigen(const Eigen::MatrixXcd& M) {
    DenseMatrix<Complex> A(static_cast<int>(M.rows()), static_cast<int>(M.cols()),
                           Complex(0));
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) A.at(r, c) = M(r, c);
    return A;
}

bool is_zero_entry(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }

/// a in slot (0,1), b in slot (1,0), diagonal from slot 2 on, zeros
/// elsewhere: the linear part of the gamma family.
bool gamma_pattern(const DenseMatrix<Complex>& A) {
    int d = A.rows();
    if (d < 2) return false;
    if (is_zero_entry(A.at(0, 1)) || is_zero_entry(A.at(1, 0))) return false;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            bool allowed = (r == 0 && c == 1) || (r == 1 && c == 0) || (r == c && r >= 2);
            if (!allowed && !is_zero_entry(A.at(r, c))) return false;
        }
    return true;
}

void normalize_column(std::vector<Complex>& v) {
    double norm2 = 0;
    for (const auto& z : v) norm2 += std::norm(z);
    double norm = std::sqrt(norm2);
    if (norm == 0) return;
    // first significant entry made positive real, then unit length
    Complex phase(1, 0);
    for (const auto& z : v) {
        if (std::abs(z) > 1e-12 * norm) {
            phase = std::conj(z) / std::abs(z);
            break;
        }
    }
    for (auto& z : v) z = z * phase / norm;
}

struct Pair {
    Complex value;
    std::vector<Complex> vector;
};

bool pair_order(const Pair& x, const Pair& y) {
    double ax = std::abs(x.value), ay = std::abs(y.value);
    if (std::abs(ax - ay) > 1e-14 * std::max({ax, ay, 1.0})) return ax > ay;
    if (x.value.real() != y.value.real()) return x.value.real() > y.value.real();
    return x.value.imag() > y.value.imag();
}

EigenDecomposition assemble(std::vector<Pair> pairs) {
    for (auto& p : pairs) normalize_column(p.vector);
    std::stable_sort(pairs.begin(), pairs.end(), pair_order);
    int d = static_cast<int>(pairs.size());
    EigenDecomposition out{std::vector<Complex>(), DenseMatrix<Complex>(d, d, Complex(0)),
                           false, 0.0};
    for (int c = 0; c < d; ++c) {
        out.values.push_back(pairs[static_cast<size_t>(c)].value);
        for (int r = 0; r < d; ++r)
            out.vectors.at(r, c) = pairs[static_cast<size_t>(c)].vector[static_cast<size_t>(r)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(out.vectors));
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    out.basis_condition = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    out.diagonalizable = smin > 1e-9 * smax && smin > 0;
    return out;
}

}  // namespace

EigenDecomposition eigen_decompose(const DenseMatrix<Complex>& A) {
    if (A.rows() != A.cols()) throw DimensionError("eigendecomposition of non-square matrix");
    int d = A.rows();

    if (gamma_pattern(A)) {
        Complex a = A.at(0, 1), b = A.at(1, 0);
        Complex mu = std::sqrt(a * b);
        std::vector<Pair> pairs;
        std::vector<Complex> vp(static_cast<size_t>(d), Complex(0));
        vp[0] = Complex(1, 0);
        vp[1] = b / mu;
        pairs.push_back({mu, vp});
        std::vector<Complex> vm(static_cast<size_t>(d), Complex(0));
        vm[0] = Complex(1, 0);
        vm[1] = -b / mu;
        pairs.push_back({-mu, vm});
        for (int i = 2; i < d; ++i) {
            std::vector<Complex> e(static_cast<size_t>(d), Complex(0));
            e[static_cast<size_t>(i)] = Complex(1, 0);
            pairs.push_back({A.at(i, i), e});
        }
        return assemble(std::move(pairs));
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(A));
    if (solver.info() != Eigen::Success)
        throw EigenbasisError("eigen solver failed to converge");
    std::vector<Pair> pairs;
    for (int i = 0; i < d; ++i) {
        Pair p;
        p.value = solver.eigenvalues()(i);
        for (int r = 0; r < d; ++r) p.vector.push_back(solver.eigenvectors()(r, i));
        pairs.push_back(std::move(p));
    }
    return assemble(std::move(pairs));
}

double spectral_radius(const DenseMatrix<Complex>& A) {
    double rho = 0;
    for (const auto& v : eigen_decompose(A).values) rho = std::max(rho, std::abs(v));
    return rho;
}

DenseMatrix<Complex> matmul(const DenseMatrix<Complex>& A, const DenseMatrix<Complex>& B) {
    if (A.cols() != B.rows()) throw DimensionError("matmul shape mismatch");
    DenseMatrix<Complex> C(A.rows(), B.cols(), Complex(0));
    for (int r = 0; r < A.rows(); ++r)
        for (int k = 0; k < A.cols(); ++k)
            for (int c = 0; c < B.cols(); ++c) C.at(r, c) += A.at(r, k) * B.at(k, c);
    return C;
}

std::vector<Complex> matvec(const DenseMatrix<Complex>& A, const std::vector<Complex>& x) {
    if (A.cols() != static_cast<int>(x.size())) throw DimensionError("matvec shape mismatch");
    std::vector<Complex> y(static_cast<size_t>(A.rows()), Complex(0));
    for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c)
            y[static_cast<size_t>(r)] += A.at(r, c) * x[static_cast<size_t>(c)];
    return y;
}

DenseMatrix<Complex> inverse(const DenseMatrix<Complex>& A) {
    if (A.rows() != A.cols()) throw DimensionError("inverse of non-square matrix");
    Eigen::MatrixXcd M = to_eigen(A);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    if (!lu.isInvertible()) throw EigenbasisError("matrix is numerically singular");
    return from_eigen(lu.inverse());
}

}  // namespace polydyn
