#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "polydyn/rational.hpp"

namespace polydyn {

/// Pluggable norm on C^d: sup, Euclidean, or weighted sup with positive
/// weights. The sup norm is the default everywhere; the proof estimates are
/// coordinatewise, which it dominates.
class Norm {
public:
    enum class Kind { Sup, Euclidean, WeightedSup };

    static Norm sup() { return Norm(Kind::Sup, {}); }
    static Norm euclidean() { return Norm(Kind::Euclidean, {}); }
    static Norm weighted_sup(std::vector<double> weights) {
        for (double w : weights)
            if (!(w > 0)) throw ParameterError("weighted sup norm needs positive weights");
        if (weights.empty()) throw ParameterError("weighted sup norm needs weights");
        return Norm(Kind::WeightedSup, std::move(weights));
    }

    Kind kind() const { return kind_; }
    const std::vector<double>& weights() const { return weights_; }

    double value(const std::vector<Complex>& v) const {
        switch (kind_) {
            case Kind::Sup: {
                double m = 0;
                for (const auto& x : v) m = std::max(m, std::abs(x));
                return m;
            }
            case Kind::Euclidean: {
                double s = 0;
                for (const auto& x : v) s += std::norm(x);
                return std::sqrt(s);
            }
            case Kind::WeightedSup: {
                if (weights_.size() != v.size())
                    throw DimensionError("weight count does not match vector dimension");
                double m = 0;
                for (size_t i = 0; i < v.size(); ++i)
                    m = std::max(m, weights_[i] * std::abs(v[i]));
                return m;
            }
        }
        return 0;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::Sup: return "sup";
            case Kind::Euclidean: return "euclidean";
            case Kind::WeightedSup: {
                std::string s = "weighted-sup:";
                for (size_t i = 0; i < weights_.size(); ++i)
                    s += (i ? "," : "") + double_str(weights_[i]);
                return s;
            }
        }
        return "?";
    }

private:
    Norm(Kind k, std::vector<double> w) : kind_(k), weights_(std::move(w)) {}
    Kind kind_;
    std::vector<double> weights_;
};

/// Exact sup norm of a rational vector.
inline Rational sup_norm_exact(const std::vector<Rational>& v) {
    Rational m(0);
    for (const auto& x : v) {
        Rational a = x.abs();
        if (a > m) m = a;
    }
    return m;
}

}  // namespace polydyn
