#pragma once

#include "polydyn/matrix.hpp"
#include "polydyn/poly_map.hpp"

namespace polydyn {

template <class C>
using JacobianMatrix = DenseMatrix<Polynomial<C>>;

/// Entry (i, j) = d f_i / d x_j, symbolically.
template <class C>
JacobianMatrix<C> jacobian(const PolyMap<C>& f) {
    int d = f.dim();
    JacobianMatrix<C> J(d, d, Polynomial<C>::zero(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) J.at(i, j) = f.component(i).differentiate(j);
    return J;
}

/// Exact symbolic determinant by cofactor expansion along the first row.
/// Dimensions here are small (d <= 5 in practice), so d! term work is fine.
template <class C>
Polynomial<C> jacobian_determinant(const JacobianMatrix<C>& J) {
    if (J.rows() != J.cols()) throw DimensionError("determinant of non-square matrix");
    int n = J.rows();
    int poly_dim = J.at(0, 0).dim();
    if (n == 1) return J.at(0, 0);
    Polynomial<C> det = Polynomial<C>::zero(poly_dim);
    for (int j = 0; j < n; ++j) {
        if (J.at(0, j).is_zero()) continue;
        JacobianMatrix<C> minor(n - 1, n - 1, Polynomial<C>::zero(poly_dim));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = J.at(r, c);
            }
        }
        Polynomial<C> term = J.at(0, j) * jacobian_determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Matrix of degree-1 coefficients of f, i.e. the differential at 0.
/// Requires f(0) = 0 exactly.
template <class C>
DenseMatrix<C> linear_part(const PolyMap<C>& f) {
    if (!f.fixes_origin())
        throw NotOriginFixedError("linear_part requires f(0) = 0");
    int d = f.dim();
    DenseMatrix<C> A(d, d, C(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            A.at(i, j) = f.component(i).coefficient(Monomial::axis(d, j));
    return A;
}

inline DenseMatrix<Complex> to_complex(const DenseMatrix<Rational>& M) {
    DenseMatrix<Complex> out(M.rows(), M.cols(), Complex(0));
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) out.at(r, c) = to_complex(M.at(r, c));
    return out;
}

}  // namespace polydyn
