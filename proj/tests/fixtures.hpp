#pragma once

// Shared example algebras for the test suite.
//
// r6: the six-vertex quiver
//         1 --a1--> 2 --a2--> 3 --a3--> 4 --a4--> 5 <--b-- 6
// bound by a2a1 = a3a2 = a4a3 = 0.  Its module category is small enough to
// enumerate by hand, which makes it the main workbench for the tower and
// tree machinery.
//
// a2: the hereditary quiver 1 --a--> 2 with no relations.

#include <set>

#include "ttower/complex.hpp"

namespace fixtures {

using namespace ttower;

inline BoundQuiverAlgebra make_r6(FieldSpec f = FieldSpec::rationals()) {
    Quiver q;
    q.nv = 6;
    q.add_arrow(0, 1, "a1");
    q.add_arrow(1, 2, "a2");
    q.add_arrow(2, 3, "a3");
    q.add_arrow(3, 4, "a4");
    q.add_arrow(5, 4, "b");
    std::vector<Relation> rels;
    for (int a = 0; a < 3; ++a)
        rels.push_back({{mpq_class(1), PathRef{a, {a, a + 1}}}});
    return BoundQuiverAlgebra(std::move(q), std::move(rels), f);
}

inline BoundQuiverAlgebra make_a2(FieldSpec f = FieldSpec::rationals()) {
    Quiver q;
    q.nv = 2;
    q.add_arrow(0, 1, "a");
    return BoundQuiverAlgebra(std::move(q), {}, f);
}

/// Thin module from 1-based vertex labels (matching the diagrams above).
inline Representation thin1(const BoundQuiverAlgebra& alg, std::initializer_list<int> verts) {
    std::set<int> s;
    for (int v : verts) s.insert(v - 1);
    return thin_module(alg, s);
}

inline Representation sum_of(const BoundQuiverAlgebra& alg,
                             const std::vector<Representation>& parts) {
    std::vector<const Representation*> p;
    for (auto& x : parts) p.push_back(&x);
    return direct_sum(alg, p).rep;
}

/// Summands of the six-summand tilting module over r6:
///   (4 6 / 5) + 6 + (3/4) + (2/3) + 2 + (1/2)
inline std::vector<Representation> t6_summands(const BoundQuiverAlgebra& alg) {
    return {thin1(alg, {4, 6, 5}), thin1(alg, {6}), thin1(alg, {3, 4}),
            thin1(alg, {2, 3}),    thin1(alg, {2}), thin1(alg, {1, 2})};
}

inline Representation make_t6(const BoundQuiverAlgebra& alg) {
    return sum_of(alg, t6_summands(alg));
}

/// Complex whose terms are the given modules, ending in degree 0, with each
/// differential the unique hom (up to scalar) between consecutive terms.
inline Complex chain_of(const BoundQuiverAlgebra& alg, const std::vector<Representation>& mods) {
    std::vector<ModuleMorphism> diffs;
    for (size_t k = 0; k + 1 < mods.size(); ++k) {
        auto hb = hom_basis(mods[k], mods[k + 1]);
        if (hb.size() != 1) throw std::logic_error("chain_of: hom space is not one-dimensional");
        diffs.push_back(hb[0]);
    }
    return Complex(alg, 1 - static_cast<int>(mods.size()), mods, std::move(diffs));
}

/// Summands of the tilting module P(1) + S(1) over a2.
inline std::vector<Representation> t_a2_summands(const BoundQuiverAlgebra& alg) {
    return {thin1(alg, {1, 2}), thin1(alg, {1})};
}

inline Representation make_t_a2(const BoundQuiverAlgebra& alg) {
    return sum_of(alg, t_a2_summands(alg));
}

}  // namespace fixtures
