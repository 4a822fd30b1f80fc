#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttower/hrs.hpp"

namespace ttower {

/// A compatibility violation: `object` lies in the tested aisle/co-aisle of
/// the tilted t-structure, but its natural truncation at `degree` does not.
struct CompatViolation {
    Complex object;
    int degree;
};

struct CompatReport {
    bool left = true;  // aisle + lower truncations, else co-aisle + upper
    int members = 0;   // corpus objects that were in the tested class
    std::vector<CompatViolation> violations;
    bool clean() const { return violations.empty(); }
};

/// Replay a reported violation from scratch.
inline bool replay_violation(Tower& tw, const CompatViolation& v, bool left) {
    int n = tw.levels();
    if (left)
        return tw.in_aisle(n, v.object, 0) &&
               !tw.in_aisle(n, tw.truncate(0, v.object, v.degree).le, 0);
    return tw.in_coaisle(n, v.object, 0) &&
           !tw.in_coaisle(n, tw.truncate(0, v.object, v.degree - 1).ge, 0);
}

/// Scan: is T^{<=0} stable under the natural truncations delta^{<=j}?  Only
/// the truncation degrees that act non-trivially on each object are tested.
inline CompatReport left_compat_scan(Tower& tw, const std::vector<Complex>& corpus) {
    CompatReport rep;
    rep.left = true;
    int n = tw.levels();
    for (const Complex& xin : corpus) {
        Complex x = xin.normalized();
        if (x.is_empty() || !tw.in_aisle(n, x, 0)) continue;
        ++rep.members;
        for (int j = x.lo(); j < x.hi(); ++j)
            if (!tw.in_aisle(n, tw.truncate(0, x, j).le, 0)) rep.violations.push_back({x, j});
    }
    return rep;
}

/// Mirror scan: is T^{>=0} stable under delta^{>=j}?
inline CompatReport right_compat_scan(Tower& tw, const std::vector<Complex>& corpus) {
    CompatReport rep;
    rep.left = false;
    int n = tw.levels();
    for (const Complex& xin : corpus) {
        Complex x = xin.normalized();
        if (x.is_empty() || !tw.in_coaisle(n, x, 0)) continue;
        ++rep.members;
        for (int j = x.lo() + 1; j <= x.hi(); ++j)
            if (!tw.in_coaisle(n, tw.truncate(0, x, j - 1).ge, 0))
                rep.violations.push_back({x, j});
    }
    return rep;
}

/// Default search corpus: simples, projectives and tilting summands, one
/// cone-closure round over chain maps between them, then shifts in
/// [-(n+1), n+1].  Deterministic order, deduplicated by serialization.
inline std::vector<Complex> default_compat_corpus(Tower& tw) {
    const BoundQuiverAlgebra& alg = tw.algebra();
    std::vector<Complex> base;
    std::set<std::string> seen;
    auto add = [&](const Complex& c) {
        Complex nc = c.normalized();
        if (nc.is_empty()) return;
        if (seen.insert(nc.key()).second) base.push_back(nc);
    };
    for (int v = 0; v < alg.quiver().nv; ++v) {
        add(tw.resolve(simple(alg, v)));
        add(tw.resolve(projective(alg, v)));
    }
    for (auto& s : tw.summands()) add(tw.resolve(s));
    size_t nbase = base.size();
    for (size_t i = 0; i < nbase; ++i)
        for (size_t j = 0; j < nbase; ++j) {
            if (i == j) continue;
            for (auto& f : chain_maps_mod_homotopy(base[i], base[j]))
                add(minimize_proj(cone(f, base[i], base[j]).C).Y);
        }
    std::vector<Complex> out;
    int n = tw.levels();
    for (auto& b : base)
        for (int s = -(n + 1); s <= n + 1; ++s) out.push_back(shift_complex(b, s));
    return out;
}

/// First left-compatibility violation on the default corpus, or nullopt if
/// the corpus is exhausted (which never certifies compatibility).
inline std::optional<CompatViolation> find_incompat_witness(Tower& tw) {
    int n = tw.levels();
    for (const Complex& x : default_compat_corpus(tw)) {
        if (!tw.in_aisle(n, x, 0)) continue;
        for (int j = x.lo(); j < x.hi(); ++j)
            if (!tw.in_aisle(n, tw.truncate(0, x, j).le, 0)) return CompatViolation{x, j};
    }
    return std::nullopt;
}

}  // namespace ttower
