#include "polydyn/orbit.hpp"

#include <cmath>

namespace polydyn {

FloatOrbit orbit(const ComplexMap& f, const std::vector<Complex>& x0, int n_max,
                 const Norm& norm, double cutoff) {
    if (static_cast<int>(x0.size()) != f.dim())
        throw DimensionError("orbit start point has wrong dimension");
    if (n_max < 1) throw ParameterError("orbit needs n_max >= 1");
    FloatOrbit o;
    o.points.push_back(x0);
    o.norms.push_back(norm.value(x0));
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Complex> next = f.evaluate(o.points.back());
        double v = norm.value(next);
        if (!std::isfinite(v) || v > cutoff) {
            o.diverged = true;
            break;
        }
        o.points.push_back(std::move(next));
        o.norms.push_back(v);
    }
    return o;
}

FloatOrbit orbit(const RationalMap& f, const std::vector<Complex>& x0, int n_max,
                 const Norm& norm, double cutoff) {
    return orbit(to_complex(f), x0, n_max, norm, cutoff);
}

ExactOrbit orbit_exact(const RationalMap& f, const std::vector<Rational>& x0, int n_max) {
    if (static_cast<int>(x0.size()) != f.dim())
        throw DimensionError("orbit start point has wrong dimension");
    if (n_max < 1) throw ParameterError("orbit needs n_max >= 1");
    ExactOrbit o;
    o.points.push_back(x0);
    o.sup_norms.push_back(sup_norm_exact(x0));
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Rational> next;
        next.reserve(x0.size());
        for (const auto& p : f.components()) next.push_back(p.evaluate(o.points.back()));
        o.sup_norms.push_back(sup_norm_exact(next));
        o.points.push_back(std::move(next));
    }
    return o;
}

}  // namespace polydyn
