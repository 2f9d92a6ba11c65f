#pragma once

#include <vector>

#include "polydyn/poly_map.hpp"

namespace polydyn {

/// (x, y, z) -> (l1*(y + x*z), l2*x, l3*z). The parameter range
/// 0 < l_i < 1/2 makes the map a contraction; pass allow_out_of_range to
/// experiment outside it (degree growth does not depend on the range).
RationalMap make_gamma3(const Rational& l1, const Rational& l2, const Rational& l3,
                        bool allow_out_of_range = false);

/// gamma on the first three coordinates, pure scaling l_i*x_i on the rest.
/// Requires lambdas.size() >= 3.
RationalMap make_gamma_d(const std::vector<Rational>& lambdas,
                         bool allow_out_of_range = false);

/// Henon plane map (x, y) -> (a*y + P(x), x) with a != 0 and deg P >= 2.
/// P is univariate (dimension 1).
RationalMap make_henon(const Rational& a, const RationalPoly& P);

/// Elementary plane map (x, y) -> (a*x + P(y), b*y + c) with a, b != 0.
/// P is univariate; P = 0 gives an affine map.
RationalMap make_elementary(const Rational& a, const Rational& b, const Rational& c,
                            const RationalPoly& P);

}  // namespace polydyn
