#pragma once

#include "ttower/complex.hpp"

namespace ttower {

/// Minimization of a bounded complex of projectives by Gaussian elimination:
/// whenever a differential has a component P(v) -> P(v) that is an
/// isomorphism, the two summands cancel.  The result is homotopy equivalent,
/// with explicit maps both ways, and has radical differentials, so it is the
/// unique minimal representative of the isomorphism class.
struct MinimizedComplex {
    Complex Y;
    ChainMap to;    // X -> Y
    ChainMap from;  // Y -> X
};

namespace detail_min {

struct StdTerm {
    std::vector<int> verts;        // vertex of each indecomposable summand
    Representation rep;            // direct sum of projective(v)
    std::vector<ModuleMorphism> incl, proj;
};

inline StdTerm make_std_term(const BoundQuiverAlgebra& alg, const std::vector<int>& verts) {
    StdTerm t;
    t.verts = verts;
    std::vector<Representation> parts;
    for (int v : verts) parts.push_back(projective(alg, v));
    std::vector<const Representation*> p;
    for (auto& x : parts) p.push_back(&x);
    DirectSum ds = direct_sum(alg, p);
    t.rep = std::move(ds.rep);
    t.incl = std::move(ds.incl);
    t.proj = std::move(ds.proj);
    return t;
}

inline ModuleMorphism invert(const ModuleMorphism& f, const FieldSpec& fld) {
    ModuleMorphism g;
    for (auto& m : f.comp) {
        auto inv = m.solve_many(Matrix::identity(m.rows(), fld));
        if (!inv) throw std::logic_error("minimize: block not invertible");
        g.comp.push_back(*inv);
    }
    return g;
}

inline bool is_iso_block(const ModuleMorphism& f) {
    for (auto& m : f.comp) {
        if (m.rows() != m.cols()) return false;
        if (m.rank() != m.rows()) return false;
    }
    return true;
}

}  // namespace detail_min

inline MinimizedComplex minimize_proj(const Complex& Xin) {
    using namespace detail_min;
    const BoundQuiverAlgebra& alg = Xin.algebra();
    const FieldSpec fld = alg.field();
    Complex X = Xin.normalized();
    MinimizedComplex out;
    if (X.is_empty()) {
        out.Y = Complex(alg);
        return out;
    }
    int lo = X.lo(), hi = X.hi();

    // Standardize every term as an explicit sum of indecomposable projectives
    // via its projective cover (an isomorphism, since the term is projective).
    std::vector<StdTerm> terms;
    std::vector<ModuleMorphism> diffs;  // between standardized terms
    ChainMap to{lo, {}}, from{lo, {}};
    std::vector<ModuleMorphism> phi, phi_inv;
    for (int i = lo; i <= hi; ++i) {
        Cover c = projective_cover(X.term(i));
        std::vector<int> verts;
        for (int v = 0; v < alg.quiver().nv; ++v)
            for (int k = 0; k < c.mult[v]; ++k) verts.push_back(v);
        StdTerm t = make_std_term(alg, verts);
        if (!(t.rep == c.proj))
            throw std::logic_error("minimize: standard form mismatch");
        for (auto& m : c.onto.comp)
            if (m.rows() != m.cols() || m.rank() != m.rows())
                throw std::logic_error("minimize: term is not projective");
        phi.push_back(c.onto);                    // std -> X^i
        phi_inv.push_back(invert(c.onto, fld));   // X^i -> std
        terms.push_back(std::move(t));
    }
    for (int i = lo; i < hi; ++i)
        diffs.push_back(compose(phi_inv[i - lo + 1], compose(X.diff(i), phi[i - lo])));
    for (int i = lo; i <= hi; ++i) {
        to.comps.push_back(phi_inv[i - lo]);
        from.comps.push_back(phi[i - lo]);
    }

    // Repeatedly cancel an invertible block.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = lo; i < hi && !changed; ++i) {
            StdTerm& S = terms[i - lo];
            StdTerm& Tt = terms[i - lo + 1];
            const ModuleMorphism& d = diffs[i - lo];
            for (size_t a = 0; a < S.verts.size() && !changed; ++a)
                for (size_t b = 0; b < Tt.verts.size() && !changed; ++b) {
                    if (S.verts[a] != Tt.verts[b]) continue;
                    ModuleMorphism alpha = compose(Tt.proj[b], compose(d, S.incl[a]));
                    if (!is_iso_block(alpha)) continue;
                    // Cancel summand a of degree i against summand b of i+1.
                    std::vector<int> uverts = S.verts, vverts = Tt.verts;
                    uverts.erase(uverts.begin() + static_cast<long>(a));
                    vverts.erase(vverts.begin() + static_cast<long>(b));
                    StdTerm U = make_std_term(alg, uverts), V = make_std_term(alg, vverts);
                    // Inclusion/projection of the complements inside old terms.
                    ModuleMorphism iU = zero_morphism(U.rep, S.rep), pU = zero_morphism(S.rep, U.rep);
                    for (size_t j = 0, jj = 0; j < S.verts.size(); ++j) {
                        if (j == a) continue;
                        iU = add(iU, compose(S.incl[j], U.proj[jj]));
                        pU = add(pU, compose(U.incl[jj], S.proj[j]));
                        ++jj;
                    }
                    ModuleMorphism iV = zero_morphism(V.rep, Tt.rep), pV = zero_morphism(Tt.rep, V.rep);
                    for (size_t j = 0, jj = 0; j < Tt.verts.size(); ++j) {
                        if (j == b) continue;
                        iV = add(iV, compose(Tt.incl[j], V.proj[jj]));
                        pV = add(pV, compose(V.incl[jj], Tt.proj[j]));
                        ++jj;
                    }
                    ModuleMorphism ainv = invert(alpha, fld);
                    ModuleMorphism beta = compose(Tt.proj[b], compose(d, iU));
                    ModuleMorphism gamma = compose(pV, compose(d, S.incl[a]));
                    ModuleMorphism delta = compose(pV, compose(d, iU));
                    ModuleMorphism dnew = sub(delta, compose(gamma, compose(ainv, beta)));

                    // Homotopy equivalence pieces at the two touched degrees.
                    ModuleMorphism f_i = sub(iU, compose(S.incl[a], compose(ainv, beta)));
                    ModuleMorphism f_i1 = iV;
                    ModuleMorphism g_i = pU;
                    ModuleMorphism g_i1 = sub(pV, compose(gamma, compose(ainv, Tt.proj[b])));

                    // Update the complex data.
                    if (i > lo) diffs[i - lo - 1] = compose(g_i, diffs[i - lo - 1]);
                    if (i + 1 < hi) diffs[i - lo + 1] = compose(diffs[i - lo + 1], f_i1);
                    diffs[i - lo] = dnew;
                    // Compose the accumulated maps.
                    to.comps[i - lo] = compose(g_i, to.comps[i - lo]);
                    to.comps[i - lo + 1] = compose(g_i1, to.comps[i - lo + 1]);
                    from.comps[i - lo] = compose(from.comps[i - lo], f_i);
                    from.comps[i - lo + 1] = compose(from.comps[i - lo + 1], f_i1);
                    terms[i - lo] = std::move(U);
                    terms[i - lo + 1] = std::move(V);
                    changed = true;
                }
        }
    }

    std::vector<Representation> reps;
    for (auto& t : terms) reps.push_back(t.rep);
    out.Y = Complex(alg, lo, std::move(reps), std::move(diffs), false);
    out.to = std::move(to);
    out.from = std::move(from);
    return out;
}

/// Isomorphism in the derived category: some map in Hom_D(A, B) has an
/// acyclic cone.  Searched among hom-basis representatives and deterministic
/// pseudo-random combinations.
inline bool derived_isomorphic(const Complex& A, const Complex& B) {
    if (A.is_zero_object() || is_acyclic(A)) return B.is_zero_object() || is_acyclic(B);
    if (B.is_zero_object() || is_acyclic(B)) return false;
    ProjObject PA = projectivize(A, false);
    auto basis = chain_maps_mod_homotopy(PA.P, B);
    if (basis.empty()) return false;
    auto try_map = [&](const ChainMap& f) { return is_quasi_iso(PA.P, f, B); };
    for (auto& f : basis)
        if (try_map(f)) return true;
    unsigned long long state = 0x853c49e6748fea9bULL;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<int>(state % 17) - 8;
    };
    for (int trial = 0; trial < 40; ++trial) {
        ChainMap f = scale_chain(basis[0], mpq_class(next()));
        for (size_t k = 1; k < basis.size(); ++k)
            f = add_chain(scale_chain(basis[k], mpq_class(next())), f, PA.P, B);
        if (try_map(f)) return true;
    }
    return false;
}

}  // namespace ttower
