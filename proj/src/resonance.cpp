#include "polydyn/resonance.hpp"

#include <cmath>
#include <limits>

namespace polydyn {

std::string EigenSymbol::str() const {
    std::string out = sign_ < 0 ? "-" : "";
    std::string factors;
    for (size_t j = 0; j < half_.size(); ++j) {
        int h = half_[j];
        if (h == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += "l" + std::to_string(j + 1);
        if (h != 2) {
            if (h % 2 == 0)
                factors += "^" + std::to_string(h / 2);
            else
                factors += "^(" + std::to_string(h) + "/2)";
        }
    }
    return out + (factors.empty() ? "1" : factors);
}

std::vector<EigenSymbol> eigen_symbols_gamma_d(int d) {
    if (d < 3) throw ParameterError("gamma_d needs dimension >= 3");
    std::vector<EigenSymbol> out;
    std::vector<int> sqrt12(static_cast<size_t>(d), 0);
    sqrt12[0] = 1;  // lambda_1^(1/2)
    sqrt12[1] = 1;  // lambda_2^(1/2)
    out.emplace_back(1, sqrt12);
    out.emplace_back(-1, sqrt12);
    for (int i = 2; i < d; ++i) out.push_back(EigenSymbol::parameter(d, i));
    return out;
}

void for_each_multi_index(int length, int lo, int hi,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> m(static_cast<size_t>(length), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining_max) {
        if (pos == length) {
            int total = hi - remaining_max;
            if (total >= lo) fn(m);
            return;
        }
        for (int v = 0; v <= remaining_max; ++v) {
            m[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining_max - v);
        }
        m[static_cast<size_t>(pos)] = 0;
    };
    rec(0, hi);
}

ResonanceReport check_resonance_symbolic(const std::vector<EigenSymbol>& eigs, int M) {
    if (M < 2) throw ParameterError("resonance order bound must be >= 2");
    if (eigs.empty()) throw ParameterError("no eigen symbols given");
    int p = eigs.front().params();
    for (const auto& e : eigs)
        if (e.params() != p)
            throw DimensionError("eigen symbols over different parameter counts");

    ResonanceReport rep;
    rep.order_checked = M;
    int s = static_cast<int>(eigs.size());
    std::vector<int> zero(static_cast<size_t>(p), 0);
    const EigenSymbol one(1, zero);

    for_each_multi_index(s, 2, M, [&](const std::vector<int>& m) {
        EigenSymbol prod = one;
        for (int j = 0; j < s; ++j) {
            int mj = m[static_cast<size_t>(j)];
            if (mj > 0) prod = prod.times(eigs[static_cast<size_t>(j)].pow(
                static_cast<unsigned>(mj)));
        }
        for (int i = 0; i < s; ++i) {
            if (eigs[static_cast<size_t>(i)] == prod)
                rep.witnesses.push_back({i + 1, m});
        }
    });
    rep.resonant = !rep.witnesses.empty();
    return rep;
}

ResonanceReport check_resonance_numeric(const std::vector<Complex>& alpha, int M,
                                        double tol) {
    if (M < 2) throw ParameterError("resonance order bound must be >= 2");
    if (alpha.empty()) throw ParameterError("no eigenvalues given");

    ResonanceReport rep;
    rep.order_checked = M;
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (const auto& a : alpha) {
        if (std::abs(a) >= 1.0) {
            rep.caveats.push_back(
                "spectrum not inside the unit disk (Poincare domain); resonance "
                "enumeration up to a finite order is weaker evidence here");
            break;
        }
    }

    int s = static_cast<int>(alpha.size());
    // pow_table[j][k] = alpha_j^k
    std::vector<std::vector<Complex>> pow_table(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j) {
        auto& col = pow_table[static_cast<size_t>(j)];
        col.push_back(Complex(1, 0));
        for (int k = 1; k <= M; ++k) col.push_back(col.back() * alpha[static_cast<size_t>(j)]);
    }

    for_each_multi_index(s, 2, M, [&](const std::vector<int>& m) {
        Complex prod(1, 0);
        for (int j = 0; j < s; ++j)
            prod *= pow_table[static_cast<size_t>(j)][static_cast<size_t>(m[static_cast<size_t>(j)])];
        for (int i = 0; i < s; ++i) {
            double gap = std::abs(alpha[static_cast<size_t>(i)] - prod);
            rep.min_gap = std::min(rep.min_gap, gap);
            if (gap < tol) rep.witnesses.push_back({i + 1, m});
        }
    });
    rep.resonant = !rep.witnesses.empty();
    return rep;
}

}  // namespace polydyn
