#include "polydyn/contraction.hpp"

#include <algorithm>

#include "polydyn/families.hpp"
#include "polydyn/jacobian.hpp"
#include "polydyn/orbit.hpp"
#include "polydyn/sampling.hpp"
#include "polydyn/spectrum.hpp"

namespace polydyn {

ContractionVerdict contraction_evidence(const RationalMap& f, int samples, double radius,
                                        int n_max, double eps, const Norm& norm,
                                        uint64_t seed) {
    if (samples < 1) throw ParameterError("contraction_evidence needs samples >= 1");
    if (n_max < 1) throw ParameterError("contraction_evidence needs n_max >= 1");

    ContractionVerdict v;
    v.samples = samples;
    v.radius = radius;
    v.eps = eps;
    v.n_max = n_max;
    v.seed = seed;
    v.caveats.push_back(
        "fixed-point uniqueness not verified (only f(0)=0 checked exactly)");
    v.caveats.push_back("sampled evidence only, not a proof");

    v.origin_fixed = f.fixes_origin();
    if (!v.origin_fixed) {
        v.caveats.push_back("f(0) != 0: not a contraction at the checkable level");
        return v;
    }

    v.spectral_radius_at_0 = spectral_radius(to_complex(linear_part(f)));
    if (v.spectral_radius_at_0 >= 1.0)
        v.caveats.push_back("spectral radius at 0 is >= 1");

    ComplexMap fc = to_complex(f);
    struct SampleResult {
        bool converged = false;
        bool diverged = false;
        int iterations = 0;
    };
    std::vector<SampleResult> results(static_cast<size_t>(samples));
    parallel_for(samples, [&](int idx) {
        std::vector<Complex> x =
            sample_polydisk_point(seed, static_cast<uint64_t>(idx), f.dim(), radius);
        SampleResult r;
        double value = norm.value(x);
        if (value < eps) {
            r.converged = true;
            r.iterations = 0;
        } else {
            // step one evaluation at a time so we can stop at eps
            for (int n = 1; n <= n_max; ++n) {
                x = fc.evaluate(x);
                value = norm.value(x);
                if (!std::isfinite(value) || value > kDivergenceCutoff) {
                    r.diverged = true;
                    r.iterations = n;
                    break;
                }
                if (value < eps) {
                    r.converged = true;
                    r.iterations = n;
                    break;
                }
            }
            if (!r.converged && !r.diverged) r.iterations = n_max;
        }
        results[static_cast<size_t>(idx)] = r;
    });

    for (const auto& r : results) {
        if (r.converged) ++v.converged_count;
        if (r.diverged) ++v.diverged_count;
        v.max_iterations_used = std::max(v.max_iterations_used, r.iterations);
    }
    v.all_sampled_orbits_converged = v.converged_count == samples;
    if (v.diverged_count > 0)
        v.caveats.push_back(std::to_string(v.diverged_count) +
                            " sampled orbit(s) passed the divergence cutoff");
    return v;
}

RecurrenceReport contraction_recurrence_check(const std::vector<Rational>& lambdas,
                                              const std::vector<Rational>& x0, int N) {
    if (lambdas.size() != 3)
        throw ParameterError("recurrence check is for the three-dimensional gamma family");
    if (x0.size() != 3) throw ArityError("x0 must have dimension 3");
    if (N < 2) throw ParameterError("recurrence check needs N >= 2");
    const Rational half(1, 2);
    for (const auto& l : lambdas)
        if (!(l > Rational(0) && l < half))
            throw ParameterError("the proof inequalities need 0 < lambda_i < 1/2");

    const Rational &l1 = lambdas[0], &l2 = lambdas[1], &l3 = lambdas[2];
    RecurrenceReport rep;

    // n* = least n >= 1 with l3^(n-1)*|z0| < l2 (l3 < 1, so it stays true)
    Rational z_abs = x0[2].abs();
    int n_star = 1;
    Rational pow_l3(1);
    while (!(pow_l3 * z_abs < l2)) {
        ++n_star;
        pow_l3 = pow_l3 * l3;
        if (n_star > N + 1) break;  // threshold not reached within range
    }
    rep.threshold_n_star = n_star;

    RationalMap gamma = make_gamma3(l1, l2, l3);
    ExactOrbit orb = orbit_exact(gamma, x0, N);

    rep.first_checked_n = std::max(2, n_star + 1);
    rep.last_checked_n = N;
    rep.sum_inequality_holds = true;
    rep.max_inequality_holds = true;
    bool margin_init = false;
    bool degenerate_zero_seen = false;

    for (int n = rep.first_checked_n; n <= N; ++n) {
        const Rational xn = orb.points[static_cast<size_t>(n)][0].abs();
        const Rational x1 = orb.points[static_cast<size_t>(n - 1)][0].abs();
        const Rational x2 = orb.points[static_cast<size_t>(n - 2)][0].abs();
        Rational rhs_sum = l1 * l2 * (x2 + x1);
        Rational rhs_max = l1 * (x1 > x2 ? x1 : x2);

        bool sum_ok = xn < rhs_sum || (xn.is_zero() && rhs_sum.is_zero());
        bool max_ok = xn < rhs_max || (xn.is_zero() && rhs_max.is_zero());
        if (xn.is_zero() && rhs_sum.is_zero()) degenerate_zero_seen = true;
        if (!sum_ok || !max_ok) {
            rep.sum_inequality_holds = rep.sum_inequality_holds && sum_ok;
            rep.max_inequality_holds = rep.max_inequality_holds && max_ok;
            if (!rep.first_violation_n) rep.first_violation_n = n;
        }
        Rational sm = rhs_sum - xn;
        Rational mm = rhs_max - xn;
        if (!margin_init) {
            rep.sum_margin = sm;
            rep.max_margin = mm;
            margin_init = true;
        } else {
            if (sm < rep.sum_margin) rep.sum_margin = sm;
            if (mm < rep.max_margin) rep.max_margin = mm;
        }
    }
    if (rep.first_checked_n > rep.last_checked_n)
        rep.caveats.push_back("no indices to check: threshold n* leaves an empty range");
    if (degenerate_zero_seen)
        rep.caveats.push_back(
            "orbit coordinate identically zero at some steps; inequalities hold there "
            "only non-strictly");
    return rep;
}

}  // namespace polydyn
