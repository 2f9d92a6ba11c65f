#pragma once

// Shared generators and independent oracles for the randomized algebra
// checks. The oracles work on raw exponent-vector term maps with plain
// rational arithmetic, deliberately bypassing Polynomial's storage,
// ordering, and normalization paths.

#include <map>
#include <random>
#include <vector>

#include "polydyn/polynomial.hpp"

namespace testutil {

using polydyn::Monomial;
using polydyn::Rational;
using polydyn::RationalPoly;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    Rational rational(int max_abs_num = 9, int max_den = 7) {
        int num = uniform(-max_abs_num, max_abs_num);
        int den = uniform(1, max_den);
        return Rational(num, den);
    }
    Rational nonzero_rational(int max_abs_num = 9, int max_den = 7) {
        Rational r = rational(max_abs_num, max_den);
        while (r.is_zero()) r = rational(max_abs_num, max_den);
        return r;
    }
};

inline RationalPoly random_poly(Rng& rng, int dim, int max_deg = 3, int max_terms = 4) {
    RationalPoly p(dim);
    int terms = rng.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(static_cast<size_t>(dim), 0);
        int budget = rng.uniform(0, max_deg);
        for (int b = 0; b < budget; ++b)
            ++exps[static_cast<size_t>(rng.uniform(0, dim - 1))];
        p.add_term(Monomial(exps), rng.rational());
    }
    return p;
}

inline RationalPoly random_nonzero_poly(Rng& rng, int dim, int max_deg = 3,
                                        int max_terms = 4) {
    RationalPoly p = random_poly(rng, dim, max_deg, max_terms);
    while (p.is_zero()) p = random_poly(rng, dim, max_deg, max_terms);
    return p;
}

// ---- independent term-map oracles ----

using TermMap = std::map<std::vector<int>, Rational>;

inline TermMap to_terms(const RationalPoly& p) {
    TermMap t;
    for (const auto& [m, c] : p.terms()) t[m.exponents()] = c;
    return t;
}

inline void oracle_accumulate(TermMap& into, const std::vector<int>& exps,
                              const Rational& c) {
    auto it = into.find(exps);
    if (it == into.end()) {
        if (!c.is_zero()) into[exps] = c;
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) into.erase(it);
}

inline TermMap oracle_add(const TermMap& a, const TermMap& b) {
    TermMap out = a;
    for (const auto& [e, c] : b) oracle_accumulate(out, e, c);
    return out;
}

inline TermMap oracle_mul(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            oracle_accumulate(out, e, ca * cb);
        }
    return out;
}

inline TermMap oracle_diff(const TermMap& a, int var) {
    TermMap out;
    for (const auto& [e, c] : a) {
        if (e[static_cast<size_t>(var)] == 0) continue;
        std::vector<int> d(e);
        int k = d[static_cast<size_t>(var)]--;
        oracle_accumulate(out, d, Rational(k) * c);
    }
    return out;
}

/// Substitution oracle: each monomial expanded by plain repeated
/// oracle_mul (no squaring, no memoization).
inline TermMap oracle_compose(const RationalPoly& p, const std::vector<RationalPoly>& subs) {
    size_t out_dim = static_cast<size_t>(subs.front().dim());
    TermMap result;
    for (const auto& [m, c] : p.terms()) {
        TermMap term{{std::vector<int>(out_dim, 0), c}};
        for (int i = 0; i < p.dim(); ++i)
            for (int e = 0; e < m.exponent(i); ++e)
                term = oracle_mul(term, to_terms(subs[static_cast<size_t>(i)]));
        result = oracle_add(result, term);
    }
    return result;
}

// ---- randomized property checks (shared with the acceptance suite) ----

inline bool check_ring_axioms(Rng& rng) {
    int dim = rng.uniform(1, 3);
    RationalPoly p = random_poly(rng, dim), q = random_poly(rng, dim),
                 r = random_poly(rng, dim);
    bool ok = (p + q) == (q + p);
    ok = ok && (p * q) == (q * p);
    ok = ok && ((p + q) + r) == (p + (q + r));
    ok = ok && ((p * q) * r) == (p * (q * r));
    ok = ok && ((p + q) * r) == (p * r + q * r);
    ok = ok && (p + RationalPoly::zero(dim)) == p;
    ok = ok && (p * RationalPoly::constant(dim, Rational(1))) == p;
    // cross-check against the term-map oracles
    ok = ok && to_terms(p + q) == oracle_add(to_terms(p), to_terms(q));
    ok = ok && to_terms(p * q) == oracle_mul(to_terms(p), to_terms(q));
    return ok;
}

inline bool check_compose_associativity(Rng& rng) {
    int d1 = rng.uniform(1, 2), d2 = rng.uniform(1, 2), d3 = rng.uniform(1, 2);
    RationalPoly p = random_poly(rng, d1, 2, 3);
    std::vector<RationalPoly> F, G;
    for (int i = 0; i < d1; ++i) F.push_back(random_poly(rng, d2, 2, 3));
    for (int i = 0; i < d2; ++i) G.push_back(random_poly(rng, d3, 2, 3));
    // compose(compose(p, F), G) == compose(p, F o G componentwise)
    RationalPoly lhs = p.compose(F).compose(G);
    std::vector<RationalPoly> FG;
    for (const auto& f : F) FG.push_back(f.compose(G));
    RationalPoly rhs = p.compose(FG);
    return lhs == rhs;
}

inline bool check_differentiation_linearity(Rng& rng) {
    int dim = rng.uniform(1, 3);
    RationalPoly p = random_poly(rng, dim), q = random_poly(rng, dim);
    Rational a = rng.rational(), b = rng.rational();
    int i = rng.uniform(0, dim - 1);
    RationalPoly lhs = (a * p + b * q).differentiate(i);
    RationalPoly rhs = a * p.differentiate(i) + b * q.differentiate(i);
    bool ok = lhs == rhs;
    ok = ok && to_terms(p.differentiate(i)) == oracle_diff(to_terms(p), i);
    return ok;
}

inline bool check_eval_compose_compat(Rng& rng) {
    int d1 = rng.uniform(1, 3), d2 = rng.uniform(1, 3);
    RationalPoly p = random_poly(rng, d1, 2, 3);
    std::vector<RationalPoly> subs;
    for (int i = 0; i < d1; ++i) subs.push_back(random_poly(rng, d2, 2, 3));
    std::vector<Rational> v;
    for (int i = 0; i < d2; ++i) v.push_back(rng.rational(4, 4));
    std::vector<Rational> inner;
    for (const auto& s : subs) inner.push_back(s.evaluate(v));
    return p.compose(subs).evaluate(v) == p.evaluate(inner);
}

inline bool check_degree_additivity(Rng& rng) {
    int dim = rng.uniform(1, 3);
    RationalPoly p = random_nonzero_poly(rng, dim), q = random_nonzero_poly(rng, dim);
    return (p * q).degree() == p.degree() + q.degree();
}

inline bool check_compose_degree_bound(Rng& rng) {
    int d1 = rng.uniform(1, 3), d2 = rng.uniform(1, 3);
    RationalPoly p = random_poly(rng, d1, 3, 3);
    std::vector<RationalPoly> subs;
    int max_sub_deg = 0;
    for (int i = 0; i < d1; ++i) {
        subs.push_back(random_poly(rng, d2, 2, 3));
        max_sub_deg = std::max(max_sub_deg, subs.back().degree());
    }
    return p.compose(subs).degree() <= p.degree() * max_sub_deg;
}

}  // namespace testutil
