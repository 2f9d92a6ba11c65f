#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydyn/polynomial.hpp"

namespace polydyn {

/// Iterates of f^n would exceed this many terms per component by default
/// before iterate() raises ResourceError.
inline constexpr size_t kDefaultMaxTerms = 4'000'000;

/// Polynomial self-map of affine d-space: d components in d variables over
/// one coefficient field. Immutable value; the embedded iterate cache is
/// shared across copies and memoizes f^1, f^2, ... as they are requested.
template <class C>
class PolyMap {
public:
    PolyMap(std::vector<Polynomial<C>> components, std::string name = "",
            std::vector<std::string> var_names = {})
        : comps_(std::move(components)),
          name_(std::move(name)),
          var_names_(std::move(var_names)),
          cache_(std::make_shared<Cache>()) {
        if (comps_.empty()) throw DimensionError("map needs at least one component");
        int d = static_cast<int>(comps_.size());
        for (const auto& p : comps_)
            if (p.dim() != d)
                throw DimensionError("map components must be polynomials in exactly " +
                                     std::to_string(d) + " variables");
    }

    static PolyMap identity(int dim) {
        std::vector<Polynomial<C>> comps;
        comps.reserve(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
            comps.push_back(Polynomial<C>::variable(dim, i));
        return PolyMap(std::move(comps), "identity");
    }

    int dim() const { return static_cast<int>(comps_.size()); }
    const std::vector<Polynomial<C>>& components() const { return comps_; }
    const Polynomial<C>& component(int i) const { return comps_[static_cast<size_t>(i)]; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// Display names for variables; defaults to x1..xd when unset.
    std::vector<std::string> var_names() const {
        if (!var_names_.empty()) return var_names_;
        std::vector<std::string> v;
        for (int i = 1; i <= dim(); ++i) v.push_back("x" + std::to_string(i));
        return v;
    }

    /// Max total degree over components (>= 0).
    int degree() const {
        int d = 0;
        for (const auto& p : comps_) d = std::max(d, p.degree());
        return d;
    }

    bool fixes_origin() const {
        for (const auto& p : comps_)
            if (!coeff_is_zero(p.constant_term())) return false;
        return true;
    }

    std::vector<C> evaluate(const std::vector<C>& point) const {
        std::vector<C> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p.evaluate(point));
        return out;
    }

    /// Structural equality of components (name and aliases are metadata).
    friend bool operator==(const PolyMap& f, const PolyMap& g) {
        return f.comps_ == g.comps_;
    }
    friend bool operator!=(const PolyMap& f, const PolyMap& g) { return !(f == g); }

    /// f^n for n >= 0 (n = 0 is the identity). Computed as f o f^(n-1) by
    /// sequential composition; every intermediate iterate is cached and the
    /// cache is shared across copies of this map, so repeated and growing
    /// requests reuse all prior work. Thread-safe: concurrent callers see
    /// either a cached value or compute-and-store under the lock, with
    /// deterministic content either way.
    PolyMap iterate(int n, size_t max_terms = kDefaultMaxTerms) const {
        if (n < 0) throw ParameterError("iterate expects n >= 0");
        if (n == 0) return identity(dim());
        if (n == 1) return *this;
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->powers.empty()) cache_->powers.push_back(comps_);
        while (static_cast<int>(cache_->powers.size()) < n) {
            const auto& prev = cache_->powers.back();
            std::vector<Polynomial<C>> next;
            next.reserve(comps_.size());
            for (const auto& p : comps_) next.push_back(p.compose(prev));
            int at = static_cast<int>(cache_->powers.size()) + 1;
            for (const auto& p : next)
                if (p.term_count() > max_terms)
                    throw ResourceError("iterate exceeded " + std::to_string(max_terms) +
                                            " terms per component",
                                        at);
            cache_->powers.push_back(std::move(next));
        }
        PolyMap out(cache_->powers[static_cast<size_t>(n - 1)],
                    name_.empty() ? "" : name_ + "^" + std::to_string(n), var_names_);
        return out;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::vector<Polynomial<C>>> powers;  // powers[k] = components of f^(k+1)
    };

    std::vector<Polynomial<C>> comps_;
    std::string name_;
    std::vector<std::string> var_names_;
    std::shared_ptr<Cache> cache_;
};

using RationalMap = PolyMap<Rational>;
using ComplexMap = PolyMap<Complex>;

inline ComplexMap to_complex(const RationalMap& f) {
    std::vector<ComplexPoly> comps;
    comps.reserve(static_cast<size_t>(f.dim()));
    for (const auto& p : f.components()) comps.push_back(to_complex(p));
    ComplexMap out(std::move(comps), f.name());
    return out;
}

/// (f o g)(x) = f(g(x)): substitutes g's components into each f_i.
template <class C>
PolyMap<C> compose_maps(const PolyMap<C>& f, const PolyMap<C>& g) {
    if (f.dim() != g.dim())
        throw DimensionError("composing maps of dimensions " + std::to_string(f.dim()) +
                             " and " + std::to_string(g.dim()));
    std::vector<Polynomial<C>> comps;
    comps.reserve(static_cast<size_t>(f.dim()));
    for (const auto& p : f.components()) comps.push_back(p.compose(g.components()));
    return PolyMap<C>(std::move(comps));
}

/// F o f o F_inv after verifying F o F_inv = F_inv o F = id exactly.
template <class C>
PolyMap<C> conjugate(const PolyMap<C>& f, const PolyMap<C>& F, const PolyMap<C>& F_inv) {
    PolyMap<C> id = PolyMap<C>::identity(F.dim());
    if (compose_maps(F, F_inv) != id || compose_maps(F_inv, F) != id)
        throw NotInverseError("F_inv is not a two-sided inverse of F");
    return compose_maps(compose_maps(F, f), F_inv);
}

/// The computed table n -> deg f^n for n = 1..N. `partial` is set when a
/// ResourceError cut the computation short; entries then stop at the last
/// completed iterate.
struct DegreeSequence {
    std::string map_name;
    std::vector<std::pair<int, int>> entries;  // (n, deg f^n), strictly indexed
    bool partial = false;
    std::optional<int> failed_at;

    std::vector<int> degrees() const {
        std::vector<int> d;
        d.reserve(entries.size());
        for (const auto& [n, deg] : entries) d.push_back(deg);
        return d;
    }
};

/// Exact degrees of f^1..f^N via the iterate cache. Submultiplicativity
/// deg f^n <= deg f^(n-1) * deg f is asserted for every computed entry.
template <class C>
DegreeSequence degree_sequence(const PolyMap<C>& f, int N,
                               size_t max_terms = kDefaultMaxTerms) {
    if (N < 1) throw ParameterError("degree_sequence expects N >= 1");
    DegreeSequence seq;
    seq.map_name = f.name();
    int deg1 = f.degree();
    int prev = 1;
    for (int n = 1; n <= N; ++n) {
        int d;
        try {
            d = f.iterate(n, max_terms).degree();
        } catch (const ResourceError& e) {
            seq.partial = true;
            seq.failed_at = e.at_iterate();
            break;
        }
        if (d > prev * deg1)
            throw Error("degree submultiplicativity violated at n = " + std::to_string(n));
        seq.entries.emplace_back(n, d);
        prev = d;
    }
    return seq;
}

}  // namespace polydyn
