#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydyn/norms.hpp"
#include "polydyn/poly_map.hpp"

namespace polydyn {

/// Evidence-level verdict, never a proof: the definition of a contraction
/// quantifies over all points, which is not checkable, so this combines an
/// exact origin-fixed test, the spectral radius at 0, and seeded sampled
/// orbits.
struct ContractionVerdict {
    bool origin_fixed = false;  // exact check of f(0) = 0
    double spectral_radius_at_0 = 0.0;
    bool all_sampled_orbits_converged = false;
    int max_iterations_used = 0;
    std::vector<std::string> caveats;

    int samples = 0;
    int converged_count = 0;
    int diverged_count = 0;  // orbits that hit the divergence cutoff
    double radius = 0.0;
    double eps = 0.0;
    int n_max = 0;
    uint64_t seed = 0;

    bool evidence_for_contraction() const {
        return origin_fixed && spectral_radius_at_0 < 1.0 && all_sampled_orbits_converged;
    }
    std::string verdict_str() const {
        return evidence_for_contraction() ? "evidence-for-contraction" : "not-contraction";
    }
};

/// Seeded quasi-uniform sample of the sup-ball of the given radius; every
/// orbit must reach norm < eps within n_max steps. Deterministic for a
/// fixed seed regardless of thread count.
ContractionVerdict contraction_evidence(const RationalMap& f, int samples, double radius,
                                        int n_max, double eps, const Norm& norm,
                                        uint64_t seed);

/// Exact verification of the two proof inequalities for the gamma family
/// along one rational orbit:
///   |x_n| < l1*l2*(|x_{n-2}| + |x_{n-1}|)   and
///   |x_n| < l1*max(|x_{n-1}|, |x_{n-2}|)
/// past the threshold n* = least n >= 1 with l3^(n-1)*|z0| < l2 (x_n is
/// the first orbit coordinate). Margins are reported as the minimum of
/// RHS - |x_n| over the checked range.
struct RecurrenceReport {
    int threshold_n_star = 0;
    int first_checked_n = 0;
    int last_checked_n = 0;
    bool sum_inequality_holds = false;   // |x_n| < l1*l2*(|x_{n-2}|+|x_{n-1}|)
    bool max_inequality_holds = false;   // |x_n| < l1*max(|x_{n-1}|,|x_{n-2}|)
    Rational sum_margin = Rational(0);   // min over checked n of RHS - |x_n|
    Rational max_margin = Rational(0);
    std::optional<int> first_violation_n;
    std::vector<std::string> caveats;
};

RecurrenceReport contraction_recurrence_check(const std::vector<Rational>& lambdas,
                                              const std::vector<Rational>& x0, int N);

}  // namespace polydyn
