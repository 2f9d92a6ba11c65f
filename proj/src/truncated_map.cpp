#include "polydyn/truncated_map.hpp"

#include <algorithm>
#include <cmath>

namespace polydyn {

TruncatedMap TruncatedMap::identity(int dim, int order) {
    TruncatedMap t(dim, order);
    for (int i = 0; i < dim; ++i) t.comps[static_cast<size_t>(i)] =
        ComplexPoly::variable(dim, i);
    return t;
}

TruncatedMap TruncatedMap::from_map(const ComplexMap& f, int order) {
    TruncatedMap t(f.dim(), order);
    for (int i = 0; i < f.dim(); ++i)
        t.comps[static_cast<size_t>(i)] = f.component(i).truncated(order);
    return t;
}

TruncatedMap TruncatedMap::compose(const TruncatedMap& inner) const {
    if (inner.dim != dim) throw DimensionError("composing truncated maps of different dimensions");
    int n = std::min(order, inner.order);
    TruncatedMap out(dim, n);
    for (int i = 0; i < dim; ++i)
        out.comps[static_cast<size_t>(i)] =
            comps[static_cast<size_t>(i)].compose(inner.comps, n).truncated(n);
    return out;
}

TruncatedMap TruncatedMap::apply_linear(const DenseMatrix<Complex>& L) const {
    if (L.rows() != dim || L.cols() != dim)
        throw DimensionError("linear action has wrong shape");
    TruncatedMap out(dim, order);
    for (int i = 0; i < dim; ++i) {
        ComplexPoly acc = ComplexPoly::zero(dim);
        for (int j = 0; j < dim; ++j) {
            if (coeff_is_zero(L.at(i, j))) continue;
            acc = acc + L.at(i, j) * comps[static_cast<size_t>(j)];
        }
        out.comps[static_cast<size_t>(i)] = acc;
    }
    return out;
}

TruncatedMap TruncatedMap::precompose_linear(const DenseMatrix<Complex>& L) const {
    if (L.rows() != dim || L.cols() != dim)
        throw DimensionError("linear substitution has wrong shape");
    std::vector<ComplexPoly> subs;
    subs.reserve(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        ComplexPoly row = ComplexPoly::zero(dim);
        for (int k = 0; k < dim; ++k) {
            if (coeff_is_zero(L.at(j, k))) continue;
            row = row + ComplexPoly::variable(dim, k, L.at(j, k));
        }
        subs.push_back(row);
    }
    TruncatedMap out(dim, order);
    for (int i = 0; i < dim; ++i)
        out.comps[static_cast<size_t>(i)] =
            comps[static_cast<size_t>(i)].compose(subs, order).truncated(order);
    return out;
}

TruncatedMap TruncatedMap::operator+(const TruncatedMap& o) const {
    if (o.dim != dim) throw DimensionError("adding truncated maps of different dimensions");
    TruncatedMap out(dim, std::min(order, o.order));
    for (int i = 0; i < dim; ++i)
        out.comps[static_cast<size_t>(i)] =
            (comps[static_cast<size_t>(i)] + o.comps[static_cast<size_t>(i)])
                .truncated(out.order);
    return out;
}

TruncatedMap TruncatedMap::operator-(const TruncatedMap& o) const {
    if (o.dim != dim)
        throw DimensionError("subtracting truncated maps of different dimensions");
    TruncatedMap out(dim, std::min(order, o.order));
    for (int i = 0; i < dim; ++i)
        out.comps[static_cast<size_t>(i)] =
            (comps[static_cast<size_t>(i)] - o.comps[static_cast<size_t>(i)])
                .truncated(out.order);
    return out;
}

std::vector<Complex> TruncatedMap::evaluate(const std::vector<Complex>& x) const {
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(dim));
    for (const auto& p : comps) out.push_back(p.evaluate(x));
    return out;
}

double TruncatedMap::max_coeff_magnitude() const {
    double m = 0;
    for (const auto& p : comps)
        for (const auto& [mono, c] : p.terms()) m = std::max(m, std::abs(c));
    return m;
}

bool TruncatedMap::linear_part_is_identity(double tol) const {
    for (int i = 0; i < dim; ++i) {
        const auto& p = comps[static_cast<size_t>(i)];
        for (int j = 0; j < dim; ++j) {
            Complex c = p.coefficient(Monomial::axis(dim, j));
            Complex want = (i == j) ? Complex(1, 0) : Complex(0, 0);
            if (std::abs(c - want) > tol) return false;
        }
    }
    return true;
}

TruncatedMap jet_inverse(const TruncatedMap& U) {
    if (!U.linear_part_is_identity(1e-12))
        throw ParameterError("jet inversion expects U = id + higher-order terms");
    int d = U.dim, N = U.order;
    TruncatedMap V = TruncatedMap::identity(d, N);
    for (int k = 2; k <= N; ++k) {
        TruncatedMap E = V.compose(U) - TruncatedMap::identity(d, N);
        // adding -E_k to V kills the degree-k defect: the new contribution
        // enters V o U through the identity linear part of U
        for (int i = 0; i < d; ++i) {
            ComplexPoly fix = E.comps[static_cast<size_t>(i)].homogeneous_part(k);
            V.comps[static_cast<size_t>(i)] =
                (V.comps[static_cast<size_t>(i)] - fix).truncated(N);
        }
    }
    return V;
}

}  // namespace polydyn
