#include "polydyn/growth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polydyn {

namespace {

std::vector<long long> differences(const std::vector<long long>& v) {
    std::vector<long long> d;
    for (size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
    return d;
}

bool all_zero(const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

}  // namespace

GrowthClass classify_growth(const DegreeSequence& seq, double exp_tol) {
    const size_t N = seq.entries.size();
    if (N < 4)
        throw InsufficientDataError("classify_growth needs at least 4 degree entries, got " +
                                    std::to_string(N));

    GrowthClass g;
    const size_t window = (N + 1) / 2;
    g.window = static_cast<int>(window);
    std::vector<long long> tail;
    for (size_t i = N - window; i < N; ++i) tail.push_back(seq.entries[i].second);

    // (a) constant tail
    if (std::all_of(tail.begin(), tail.end(),
                    [&](long long x) { return x == tail.front(); })) {
        g.kind = GrowthClass::Kind::Bounded;
        g.evidence = "last " + std::to_string(window) + " degrees all equal " +
                     std::to_string(tail.front());
        return g;
    }

    // (b) iterated exact differencing: first differences constant -> Linear,
    // higher vanishing levels -> Polynomial(k), k <= 4
    std::vector<long long> diff = differences(tail);
    for (int k = 1; k <= 4; ++k) {
        if (diff.size() < 2) break;  // cannot certify constancy from one value
        std::vector<long long> next = differences(diff);
        if (all_zero(next)) {
            if (k == 1) {
                g.kind = GrowthClass::Kind::Linear;
                g.slope = static_cast<double>(diff.front());
                g.evidence = "first differences constant = " + std::to_string(diff.front()) +
                             " over last " + std::to_string(window) + " entries";
            } else {
                g.kind = GrowthClass::Kind::Polynomial;
                g.poly_degree = k;
                g.evidence = "differences vanish at level " + std::to_string(k + 1) +
                             " over last " + std::to_string(window) + " entries";
            }
            return g;
        }
        diff = std::move(next);
    }

    // (c) stabilized log(deg)/n over the last quarter -> Exponential
    const size_t quarter = std::max<size_t>(2, (N + 3) / 4);
    std::vector<double> r;
    for (size_t i = N - quarter; i < N; ++i) {
        double deg = static_cast<double>(seq.entries[i].second);
        double n = static_cast<double>(seq.entries[i].first);
        r.push_back(std::log(deg) / n);
    }
    double max_rel = 0;
    for (size_t i = 1; i < r.size(); ++i) {
        double denom = std::abs(r[i]) > 0 ? std::abs(r[i]) : 1.0;
        max_rel = std::max(max_rel, std::abs(r[i] - r[i - 1]) / denom);
    }
    g.log_rate_residual = max_rel;
    double rate = std::exp(r.back());
    if (max_rel < exp_tol && rate > 1.0) {
        g.kind = GrowthClass::Kind::Exponential;
        g.rate = rate;
        std::ostringstream ev;
        ev << "log-rate stabilized over last " << quarter
           << " entries (max relative change " << max_rel << "), rate "
           << rate;
        g.evidence = ev.str();
        return g;
    }

    g.kind = GrowthClass::Kind::Inconclusive;
    std::ostringstream ev;
    ev << "no constant tail, no vanishing differences up to level 5, log-rate "
          "relative change "
       << max_rel << " >= " << exp_tol;
    g.evidence = ev.str();
    return g;
}

std::string plane_class_str(PlaneClass c) {
    switch (c) {
        case PlaneClass::AffineLike: return "affine-like";
        case PlaneClass::ElementaryLike: return "elementary-like";
        case PlaneClass::Loxodromic: return "loxodromic";
        case PlaneClass::Inconclusive: return "inconclusive";
    }
    return "?";
}

PlaneVerdict classify_plane(const RationalMap& f, int N) {
    if (f.dim() != 2)
        throw DimensionError("classify_plane expects a plane map, got dimension " +
                             std::to_string(f.dim()));
    PlaneVerdict v;
    v.seq = degree_sequence(f, N);
    v.growth = classify_growth(v.seq);
    switch (v.growth.kind) {
        case GrowthClass::Kind::Exponential:
            v.verdict = PlaneClass::Loxodromic;
            break;
        case GrowthClass::Kind::Bounded: {
            bool all_one = std::all_of(v.seq.entries.begin(), v.seq.entries.end(),
                                       [](const auto& e) { return e.second == 1; });
            v.verdict = all_one ? PlaneClass::AffineLike : PlaneClass::ElementaryLike;
            break;
        }
        default:
            v.verdict = PlaneClass::Inconclusive;
            break;
    }
    return v;
}

StrictAlgebraicityReport strict_algebraicity_report(const RationalMap& f, int N) {
    if (N < 8) throw ParameterError("strict_algebraicity_report needs N >= 8");
    StrictAlgebraicityReport r;
    r.seq = degree_sequence(f, N);
    r.growth = classify_growth(r.seq);
    r.bounded_through_N = r.growth.kind == GrowthClass::Kind::Bounded;
    std::ostringstream text;
    if (r.bounded_through_N) {
        text << "consistent with strictly algebraic (degree bounded through N=" << N
             << "); boundedness beyond N is not decided by finite computation";
    } else {
        text << "not strictly algebraic IF the trend continues (" << r.growth.kind_str()
             << " degree growth through N=" << N
             << "); degree table attached; boundedness beyond N is not decided by finite "
                "computation";
    }
    r.verdict_text = text.str();
    return r;
}

}  // namespace polydyn
