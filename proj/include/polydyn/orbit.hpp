#pragma once

#include <vector>

#include "polydyn/norms.hpp"
#include "polydyn/poly_map.hpp"

namespace polydyn {

/// Orbits never touch symbolic iterates: each step is one evaluation of f,
/// which is O(terms) instead of the composed iterate's growing term count.

inline constexpr double kDivergenceCutoff = 1e30;

/// Floating-point orbit x_0, f(x_0), ... with the chosen norm recorded per
/// step. `diverged` is set when the norm passes the divergence cutoff (or
/// stops being finite); the points computed so far are kept.
struct FloatOrbit {
    std::vector<std::vector<Complex>> points;
    std::vector<double> norms;
    bool diverged = false;

    int steps() const { return static_cast<int>(points.size()) - 1; }
};

FloatOrbit orbit(const ComplexMap& f, const std::vector<Complex>& x0, int n_max,
                 const Norm& norm = Norm::sup(), double cutoff = kDivergenceCutoff);

/// Exact -> float conversion happens once, up front.
FloatOrbit orbit(const RationalMap& f, const std::vector<Complex>& x0, int n_max,
                 const Norm& norm = Norm::sup(), double cutoff = kDivergenceCutoff);

/// Exact rational orbit; sup norms are exact rationals.
struct ExactOrbit {
    std::vector<std::vector<Rational>> points;
    std::vector<Rational> sup_norms;

    int steps() const { return static_cast<int>(points.size()) - 1; }
};

ExactOrbit orbit_exact(const RationalMap& f, const std::vector<Rational>& x0, int n_max);

}  // namespace polydyn
