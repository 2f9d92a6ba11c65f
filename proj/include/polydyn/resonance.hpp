#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polydyn/rational.hpp"

namespace polydyn {

/// Exact symbolic eigenvalue sign * prod lambda_j^(e_j) over formal,
/// algebraically independent transcendental parameters lambda_1..lambda_p.
/// Exponents are half-integers stored in half units, so all algebra is
/// integer-exact. Two symbols are equal iff signs and exponent vectors
/// match, which by algebraic independence is the only way the values can
/// coincide.
class EigenSymbol {
public:
    EigenSymbol(int sign, std::vector<int> half_exponents)
        : sign_(sign), half_(std::move(half_exponents)) {
        if (sign_ != 1 && sign_ != -1) throw ParameterError("eigen symbol sign must be +-1");
        if (half_.empty()) throw ParameterError("eigen symbol needs at least one parameter");
    }

    /// The symbol lambda_{j+1} over p parameters.
    static EigenSymbol parameter(int p, int j) {
        std::vector<int> h(static_cast<size_t>(p), 0);
        h[static_cast<size_t>(j)] = 2;  // exponent 1
        return EigenSymbol(1, std::move(h));
    }

    int sign() const { return sign_; }
    int params() const { return static_cast<int>(half_.size()); }
    const std::vector<int>& half_exponents() const { return half_; }

    EigenSymbol times(const EigenSymbol& o) const {
        if (half_.size() != o.half_.size())
            throw DimensionError("eigen symbols over different parameter counts");
        std::vector<int> h(half_);
        for (size_t i = 0; i < h.size(); ++i) h[i] += o.half_[i];
        return EigenSymbol(sign_ * o.sign_, std::move(h));
    }

    EigenSymbol pow(unsigned k) const {
        std::vector<int> h(half_.size(), 0);
        for (size_t i = 0; i < h.size(); ++i) h[i] = half_[i] * static_cast<int>(k);
        return EigenSymbol((k % 2 == 0) ? 1 : sign_, std::move(h));
    }

    friend bool operator==(const EigenSymbol& a, const EigenSymbol& b) {
        return a.sign_ == b.sign_ && a.half_ == b.half_;
    }
    friend bool operator!=(const EigenSymbol& a, const EigenSymbol& b) { return !(a == b); }

    /// e.g. "-l1^(1/2)*l2^(1/2)", "l3", "1".
    std::string str() const;

private:
    int sign_;
    std::vector<int> half_;  // exponent of lambda_{j+1} in half units
};

/// The spectrum of D_0 gamma_d as formal symbols:
/// +sqrt(l1*l2), -sqrt(l1*l2), l3, ..., ld. Requires d >= 3.
std::vector<EigenSymbol> eigen_symbols_gamma_d(int d);

struct ResonanceWitness {
    int target_index;             // 1-based i with alpha_i = alpha^m
    std::vector<int> multi_index; // m, |m| >= 2
};

struct ResonanceReport {
    bool resonant = false;
    std::vector<ResonanceWitness> witnesses;
    int order_checked = 0;       // M: all |m| in [2, M] were enumerated
    double min_gap = 0.0;        // numeric checker only: min |alpha^m - alpha_i|
    std::vector<std::string> caveats;
};

/// Exhaustive exact search over all multi-indices with 2 <= |m| <= M and
/// all targets i. Sound and complete to order M for formal symbols.
ResonanceReport check_resonance_symbolic(const std::vector<EigenSymbol>& eigs, int M);

/// Same enumeration on concrete complex eigenvalues, flagging
/// |alpha_i - alpha^m| < tol. Used as the guard before numeric
/// linearization; warns when the spectrum is outside the Poincare domain.
ResonanceReport check_resonance_numeric(const std::vector<Complex>& alpha, int M,
                                        double tol);

/// Calls fn(m) for every multi-index of the given length with
/// lo <= |m| <= hi, in lexicographic order (deterministic).
void for_each_multi_index(int length, int lo, int hi,
                          const std::function<void(const std::vector<int>&)>& fn);

}  // namespace polydyn
