#pragma once

#include <vector>

#include "polydyn/matrix.hpp"
#include "polydyn/poly_map.hpp"

namespace polydyn {

/// Formal map with complex coefficients kept only up to total degree
/// `order` (the N-jet). Composition discards higher terms as it goes, so
/// jets compose associatively up to the shared order.
struct TruncatedMap {
    int dim;
    int order;
    std::vector<ComplexPoly> comps;

    TruncatedMap(int dim_, int order_)
        : dim(dim_), order(order_),
          comps(static_cast<size_t>(dim_), ComplexPoly::zero(dim_)) {
        if (dim_ < 1) throw DimensionError("truncated map dimension must be >= 1");
        if (order_ < 1) throw ParameterError("truncation order must be >= 1");
    }

    static TruncatedMap identity(int dim, int order);
    static TruncatedMap from_map(const ComplexMap& f, int order);

    const ComplexPoly& component(int i) const { return comps[static_cast<size_t>(i)]; }

    /// this o inner, truncated at min(order, inner.order).
    TruncatedMap compose(const TruncatedMap& inner) const;

    /// L o this (left matrix action on components).
    TruncatedMap apply_linear(const DenseMatrix<Complex>& L) const;

    /// this o L (substitute the linear map x -> Lx).
    TruncatedMap precompose_linear(const DenseMatrix<Complex>& L) const;

    TruncatedMap operator+(const TruncatedMap& o) const;
    TruncatedMap operator-(const TruncatedMap& o) const;

    std::vector<Complex> evaluate(const std::vector<Complex>& x) const;

    /// Largest coefficient magnitude across all components.
    double max_coeff_magnitude() const;

    /// Degree-1 part equals the identity matrix, within tol per entry.
    bool linear_part_is_identity(double tol) const;
};

/// N-jet of the compositional inverse of U = id + h.o.t.; V o U = id up to
/// the truncation order. Requires U's linear part to be the identity.
TruncatedMap jet_inverse(const TruncatedMap& U);

}  // namespace polydyn
