#include "polydyn/families.hpp"

namespace polydyn {

namespace {

void check_lambda_range(const std::vector<Rational>& lambdas, bool allow) {
    const Rational half(1, 2);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] > Rational(0) && lambdas[i] < half) continue;
        if (allow) continue;
        throw ParameterError("lambda_" + std::to_string(i + 1) + " = " + lambdas[i].str() +
                             " outside (0, 1/2); pass allow_out_of_range to override");
    }
}

/// Embeds a univariate polynomial as a polynomial in `dim` variables, with
/// its variable mapped to x_{var+1}.
RationalPoly embed_univariate(const RationalPoly& P, int dim, int var) {
    if (P.dim() != 1) throw DimensionError("expected a univariate polynomial");
    RationalPoly out(dim);
    for (const auto& [m, c] : P.terms())
        out.add_term(Monomial::axis(dim, var, m.exponent(0)), c);
    return out;
}

}  // namespace

RationalMap make_gamma3(const Rational& l1, const Rational& l2, const Rational& l3,
                        bool allow_out_of_range) {
    return make_gamma_d({l1, l2, l3}, allow_out_of_range);
}

RationalMap make_gamma_d(const std::vector<Rational>& lambdas, bool allow_out_of_range) {
    int d = static_cast<int>(lambdas.size());
    if (d < 3) throw ParameterError("gamma_d needs dimension >= 3");
    check_lambda_range(lambdas, allow_out_of_range);

    std::vector<RationalPoly> comps;
    comps.reserve(lambdas.size());
    // x1 -> l1*(x2 + x1*x3)
    RationalPoly first =
        lambdas[0] * (RationalPoly::variable(d, 1) +
                      RationalPoly::variable(d, 0) * RationalPoly::variable(d, 2));
    comps.push_back(first);
    // x2 -> l2*x1
    comps.push_back(RationalPoly::variable(d, 0, lambdas[1]));
    // x_i -> l_i*x_i for i >= 3
    for (int i = 2; i < d; ++i)
        comps.push_back(RationalPoly::variable(d, i, lambdas[static_cast<size_t>(i)]));

    std::vector<std::string> names;
    if (d == 3) names = {"x", "y", "z"};
    return RationalMap(std::move(comps), d == 3 ? "gamma3" : "gamma" + std::to_string(d),
                       std::move(names));
}

RationalMap make_henon(const Rational& a, const RationalPoly& P) {
    if (a.is_zero()) throw ParameterError("henon map needs a != 0");
    if (P.dim() != 1) throw DimensionError("henon P must be univariate");
    if (P.degree() < 2) throw ParameterError("henon map needs deg P >= 2");
    std::vector<RationalPoly> comps;
    comps.push_back(RationalPoly::variable(2, 1, a) + embed_univariate(P, 2, 0));
    comps.push_back(RationalPoly::variable(2, 0));
    return RationalMap(std::move(comps), "henon", {"x", "y"});
}

RationalMap make_elementary(const Rational& a, const Rational& b, const Rational& c,
                            const RationalPoly& P) {
    if (a.is_zero() || b.is_zero()) throw ParameterError("elementary map needs a, b != 0");
    if (P.dim() != 1) throw DimensionError("elementary P must be univariate");
    std::vector<RationalPoly> comps;
    comps.push_back(RationalPoly::variable(2, 0, a) + embed_univariate(P, 2, 1));
    comps.push_back(RationalPoly::variable(2, 1, b) + RationalPoly::constant(2, c));
    return RationalMap(std::move(comps), "elementary", {"x", "y"});
}

}  // namespace polydyn
