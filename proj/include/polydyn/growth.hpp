#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydyn/poly_map.hpp"

namespace polydyn {

/// Degree-growth classification of n -> deg f^n. Degrees are exact
/// integers, so the bounded/linear/polynomial branches are decided by exact
/// differencing; only the exponential branch carries a tolerance.
struct GrowthClass {
    enum class Kind { Bounded, Linear, Polynomial, Exponential, Inconclusive };

    Kind kind = Kind::Inconclusive;
    double slope = 0.0;      // Linear: the common first difference
    int poly_degree = 0;     // Polynomial: k >= 2
    double rate = 0.0;       // Exponential: empirical dynamical degree
    std::string evidence;    // fitted parameters / residual summary
    int window = 0;          // entries examined by the differencing branch
    double log_rate_residual = 0.0;  // exponential branch: max relative change

    std::string kind_str() const {
        switch (kind) {
            case Kind::Bounded: return "bounded";
            case Kind::Linear: return "linear";
            case Kind::Polynomial: return "polynomial";
            case Kind::Exponential: return "exponential";
            case Kind::Inconclusive: return "inconclusive";
        }
        return "?";
    }
};

/// Decision procedure over the last half of the table: equal tail ->
/// Bounded; vanishing iterated differences -> Linear / Polynomial(k), k up
/// to 4; stabilized log(deg)/n -> Exponential; otherwise Inconclusive.
/// Needs at least 4 entries (one second difference).
GrowthClass classify_growth(const DegreeSequence& seq, double exp_tol = 1e-3);

/// Growth-signature verdict for plane maps; never claims a conjugating map.
enum class PlaneClass { AffineLike, ElementaryLike, Loxodromic, Inconclusive };

std::string plane_class_str(PlaneClass c);

struct PlaneVerdict {
    PlaneClass verdict = PlaneClass::Inconclusive;
    DegreeSequence seq;
    GrowthClass growth;
};

PlaneVerdict classify_plane(const RationalMap& f, int N);

/// Computable side of the bounded-degree criterion: Bounded through N is
/// reported as consistent with strict algebraicity; growth is reported as a
/// trend only. Boundedness beyond N is explicitly not decided.
struct StrictAlgebraicityReport {
    DegreeSequence seq;
    GrowthClass growth;
    bool bounded_through_N = false;
    std::string verdict_text;
};

StrictAlgebraicityReport strict_algebraicity_report(const RationalMap& f, int N);

}  // namespace polydyn
