#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "polydyn/errors.hpp"

namespace polydyn {

/// Exponent vector of one term: exponents[i] is the power of x_{i+1}.
/// Length is the ambient dimension; entries are non-negative.
class Monomial {
public:
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        if (exps_.empty()) throw DimensionError("monomial dimension must be >= 1");
        for (int e : exps_)
            if (e < 0) throw ParameterError("negative exponent in monomial");
    }

    /// The constant monomial (all exponents zero).
    static Monomial constant(int dim) {
        if (dim < 1) throw DimensionError("monomial dimension must be >= 1");
        return Monomial(std::vector<int>(static_cast<size_t>(dim), 0));
    }

    /// x_{i+1}^e (i is 0-based).
    static Monomial axis(int dim, int i, int e = 1) {
        Monomial m = constant(dim);
        if (i < 0 || i >= dim) throw IndexError("monomial axis out of range");
        if (e < 0) throw ParameterError("negative exponent in monomial");
        m.exps_[static_cast<size_t>(i)] = e;
        return m;
    }

    int dim() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    int total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_constant() const { return total_degree() == 0; }

    Monomial times(const Monomial& o) const {
        std::vector<int> e(exps_);
        for (size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return Monomial(std::move(e));
    }

    Monomial with_exponent(int i, int e) const {
        std::vector<int> v(exps_);
        v[static_cast<size_t>(i)] = e;
        return Monomial(std::move(v));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

    /// Factors like "x1*x3^2"; empty string for the constant monomial.
    std::string str(const std::vector<std::string>& names) const {
        std::string out;
        for (size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
        }
        return out;
    }

private:
    std::vector<int> exps_;
};

/// Graded-lex, highest first: higher total degree precedes; ties broken by
/// lexicographically larger exponent vector (x1 strongest). This is the
/// canonical term order for storage, rendering, and golden files.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.exponents() > b.exponents();
    }
};

}  // namespace polydyn
