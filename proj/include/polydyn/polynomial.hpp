#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "polydyn/monomial.hpp"
#include "polydyn/rational.hpp"

namespace polydyn {

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Complex& c) { return c.real() == 0.0 && c.imag() == 0.0; }

inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const Complex& c) { return "(" + complex_str(c) + ")"; }

/// Sparse exact multivariate polynomial over a fixed coefficient field C
/// (Rational or Complex). Canonical form: no stored zero coefficients,
/// terms kept in graded-lex order, so structural equality is mathematical
/// equality. Values are immutable in practice: every operation returns a
/// fresh polynomial.
template <class C>
class Polynomial {
public:
    using Terms = std::map<Monomial, C, GrlexDesc>;

    explicit Polynomial(int dim) : dim_(dim) {
        if (dim < 1) throw DimensionError("polynomial dimension must be >= 1");
    }

    static Polynomial zero(int dim) { return Polynomial(dim); }

    static Polynomial constant(int dim, const C& c) {
        Polynomial p(dim);
        p.add_term(Monomial::constant(dim), c);
        return p;
    }

    /// The coordinate polynomial x_{i+1} (i is 0-based).
    static Polynomial variable(int dim, int i, const C& coeff = C(1)) {
        if (i < 0 || i >= dim) throw IndexError("variable index out of range");
        Polynomial p(dim);
        p.add_term(Monomial::axis(dim, i), coeff);
        return p;
    }

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Max total degree over stored terms; 0 for the zero polynomial.
    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coefficient(Monomial::constant(dim_)); }

    /// Accumulates c into the coefficient of m, keeping canonical form.
    void add_term(const Monomial& m, const C& c) {
        if (m.dim() != dim_) throw DimensionError("term dimension mismatch");
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        p.require_same_dim(q, "add");
        Polynomial r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        p.require_same_dim(q, "subtract");
        Polynomial r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, C(0) - c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(dim_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, C(0) - c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        return mul_truncated(p, q, -1);
    }

    friend Polynomial operator*(const C& a, const Polynomial& p) {
        Polynomial r(p.dim_);
        if (coeff_is_zero(a)) return r;
        for (const auto& [m, c] : p.terms_) r.add_term(m, a * c);
        return r;
    }

    /// Distributive product; terms of total degree > max_degree are dropped
    /// when max_degree >= 0 (graded truncation).
    static Polynomial mul_truncated(const Polynomial& p, const Polynomial& q,
                                    int max_degree) {
        p.require_same_dim(q, "multiply");
        Polynomial r(p.dim_);
        for (const auto& [mp, cp] : p.terms_) {
            int dp = mp.total_degree();
            for (const auto& [mq, cq] : q.terms_) {
                if (max_degree >= 0 && dp + mq.total_degree() > max_degree) continue;
                r.add_term(mp.times(mq), cp * cq);
            }
        }
        return r;
    }

    /// p^k by repeated squaring, k >= 0.
    Polynomial pow(unsigned k, int max_degree = -1) const {
        Polynomial acc = constant(dim_, C(1));
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1u) acc = mul_truncated(acc, base, max_degree);
            k >>= 1u;
            if (k > 0) base = mul_truncated(base, base, max_degree);
        }
        return acc;
    }

    /// Substitution x_i -> subs[i], expanded to canonical form in the
    /// substituents' dimension. Powers subs[i]^k are memoized and built by
    /// repeated squaring, which dominates the runtime of deep iterates.
    Polynomial compose(const std::vector<Polynomial>& subs, int max_degree = -1) const {
        if (static_cast<int>(subs.size()) != dim_)
            throw ArityError("compose expects exactly " + std::to_string(dim_) +
                             " substituents, got " + std::to_string(subs.size()));
        for (const auto& s : subs)
            if (s.dim_ != subs.front().dim_)
                throw DimensionError("substituents have mixed dimensions");
        int out_dim = subs.front().dim_;

        // powers[i][k] = subs[i]^k, filled on demand.
        std::vector<std::map<unsigned, Polynomial>> powers(static_cast<size_t>(dim_));
        auto power_of = [&](int i, unsigned k, auto&& self) -> const Polynomial& {
            auto& memo = powers[static_cast<size_t>(i)];
            auto it = memo.find(k);
            if (it != memo.end()) return it->second;
            Polynomial val(out_dim);
            if (k == 0) {
                val = constant(out_dim, C(1));
            } else if (k == 1) {
                val = subs[static_cast<size_t>(i)];
            } else {
                const Polynomial& half = self(i, k / 2, self);
                val = mul_truncated(half, half, max_degree);
                if (k & 1u)
                    val = mul_truncated(val, subs[static_cast<size_t>(i)], max_degree);
            }
            return memo.emplace(k, std::move(val)).first->second;
        };

        Polynomial result(out_dim);
        for (const auto& [m, c] : terms_) {
            Polynomial term = constant(out_dim, c);
            for (int i = 0; i < dim_; ++i) {
                int e = m.exponent(i);
                if (e == 0) continue;
                term = mul_truncated(term, power_of(i, static_cast<unsigned>(e), power_of),
                                     max_degree);
            }
            result = result + term;
        }
        return result;
    }

    /// Formal partial derivative with respect to x_{i+1} (i is 0-based).
    Polynomial differentiate(int i) const {
        if (i < 0 || i >= dim_) throw IndexError("differentiation index out of range");
        Polynomial r(dim_);
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(i);
            if (e == 0) continue;
            r.add_term(m.with_exponent(i, e - 1), C(e) * c);
        }
        return r;
    }

    /// Exact evaluation with memoized coordinate powers.
    C evaluate(const std::vector<C>& point) const {
        if (static_cast<int>(point.size()) != dim_)
            throw ArityError("evaluate expects a point of dimension " +
                             std::to_string(dim_));
        // pw[i][k] = point[i]^k up to the max exponent of x_i in this polynomial
        std::vector<std::vector<C>> pw(static_cast<size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            int maxe = 0;
            for (const auto& [m, c] : terms_) maxe = std::max(maxe, m.exponent(i));
            auto& col = pw[static_cast<size_t>(i)];
            col.reserve(static_cast<size_t>(maxe) + 1);
            col.push_back(C(1));
            for (int k = 1; k <= maxe; ++k)
                col.push_back(col.back() * point[static_cast<size_t>(i)]);
        }
        C acc(0);
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (int i = 0; i < dim_; ++i) {
                int e = m.exponent(i);
                if (e > 0) t = t * pw[static_cast<size_t>(i)][static_cast<size_t>(e)];
            }
            acc = acc + t;
        }
        return acc;
    }

    /// Terms of total degree k, as a polynomial.
    Polynomial homogeneous_part(int k) const {
        Polynomial r(dim_);
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == k) r.terms_.emplace(m, c);
        return r;
    }

    /// Drops terms of total degree > max_degree.
    Polynomial truncated(int max_degree) const {
        Polynomial r(dim_);
        for (const auto& [m, c] : terms_)
            if (m.total_degree() <= max_degree) r.terms_.emplace(m, c);
        return r;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.dim_ == q.dim_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    /// Canonical text rendering: graded-lex term order, "num/den" rationals
    /// or "(a+bi)" complex coefficients, variables x1..xd unless names are
    /// supplied. This is the bit-exact golden-file format.
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void require_same_dim(const Polynomial& o, const char* what) const {
        if (dim_ != o.dim_)
            throw DimensionError(std::string(what) + " of polynomials in " +
                                 std::to_string(dim_) + " and " + std::to_string(o.dim_) +
                                 " variables");
    }

    int dim_;
    Terms terms_;
};

template <>
inline std::string Polynomial<Rational>::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = c.abs();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = m.str(names);
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

template <>
inline std::string Polynomial<Complex>::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono = m.str(names);
        out += coeff_str(c);
        if (!mono.empty()) out += "*" + mono;
    }
    return out;
}

using RationalPoly = Polynomial<Rational>;
using ComplexPoly = Polynomial<Complex>;

/// Explicit exact -> float coefficient conversion.
inline ComplexPoly to_complex(const RationalPoly& p) {
    ComplexPoly r(p.dim());
    for (const auto& [m, c] : p.terms()) r.add_term(m, to_complex(c));
    return r;
}

/// Cross-field evaluation: exact polynomial at a complex point, converting
/// each coefficient explicitly.
inline Complex evaluate_complex(const RationalPoly& p, const std::vector<Complex>& point) {
    return to_complex(p).evaluate(point);
}

}  // namespace polydyn
