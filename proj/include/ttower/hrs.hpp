#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ttower/minimize.hpp"
#include "ttower/tilting.hpp"

namespace ttower {

/// The tower of t-structures induced by a classical n-tilting module T.
/// Level 0 is the natural t-structure; level i >= 1 is obtained from level
/// i-1 by tilting its heart H_{i-1} at the torsion pair whose torsion-free
/// class is Ker Hom(T, -).  Equivalently, the level-i co-aisle is
///   D_i^{>=k} = D^{>=k-i}  intersect  { X : Hom(T, X[m]) = 0 for all m < k },
/// which is what the membership test uses.
///
/// All complexes handled here must be bounded complexes of projectives (as
/// produced by resolve()); every returned complex is again a minimized
/// complex of projectives, so outputs can be fed back in.
class Tower {
  public:
    Tower(const BoundQuiverAlgebra& alg, std::vector<Representation> summands)
        : alg_(&alg), summands_(std::move(summands)), tp_(alg, sum_up(alg, summands_)) {}

    const BoundQuiverAlgebra& algebra() const { return *alg_; }
    const TiltingPair& pair() const { return tp_; }
    const std::vector<Representation>& summands() const { return summands_; }
    int levels() const { return tp_.n(); }

    /// Minimal projective replacement of an arbitrary bounded complex.
    Complex resolve(const Complex& X) const { return minimize_proj(projectivize(X, false).P).Y; }
    Complex resolve(const Representation& M, int degree = 0) const {
        return resolve(Complex::from_module(*alg_, M, degree));
    }

    int rhom_dim(const Complex& X, int j) {
        auto key = std::make_pair(j, X.key());
        auto it = rhom_memo_.find(key);
        if (it != rhom_memo_.end()) return it->second;
        int d = tp_.rhom_dim(X, j);
        rhom_memo_.emplace(std::move(key), d);
        return d;
    }

    /// X in D_i^{>=k}, via the window identity above.
    bool in_coaisle(int i, const Complex& Xin, int k) {
        Complex X = Xin.normalized();
        if (X.is_empty()) return true;
        for (int m = X.lo(); m <= std::min(X.hi(), k - i - 1); ++m)
            if (!cohomology(X, m).is_zero()) return false;
        for (int m = X.lo(); m <= std::min(k - 1, X.hi() + tp_.n()); ++m)
            if (rhom_dim(X, m) != 0) return false;
        return true;
    }

    /// X in D_i^{<=k}.  For i >= 1 this is the tilted-aisle description:
    /// all level-(i-1) cohomology above k vanishes and the one in degree k
    /// lies in the torsion class of H_{i-1}.
    bool in_aisle(int i, const Complex& Xin, int k) {
        Complex X = Xin.normalized();
        if (X.is_empty() || is_acyclic(X)) return true;
        if (i == 0) {
            for (int m = std::max(k + 1, X.lo()); m <= X.hi(); ++m)
                if (!cohomology(X, m).is_zero()) return false;
            return true;
        }
        for (int m = k + 1; m <= X.hi() + i - 1; ++m)
            if (!t_cohomology(i - 1, X, m).is_zero_object()) return false;
        Complex Hk = heart_cohomology(i - 1, X, k);
        return in_torsion(i - 1, Hk);
    }

    bool in_heart(int i, const Complex& X) {
        return in_aisle(i, X, 0) && in_coaisle(i, X, 0);
    }

    /// Truncation triangle  le -> X -> ge -> le[1]  for the level-i
    /// t-structure: le = tau_i^{<=k} X, ge = tau_i^{>=k+1} X.
    Truncation truncate(int i, const Complex& Xin, int k) {
        if (i < 0 || i > tp_.n()) throw std::invalid_argument("truncate: level out of range");
        Complex X = Xin.normalized();
        auto key = std::make_tuple(i, k, X.key());
        auto it = trunc_memo_.find(key);
        if (it != trunc_memo_.end()) return it->second;
        Truncation out;
        if (k != 0) {
            Truncation t0 = truncate(i, shift_complex(X, k), 0);
            out.le = shift_complex(t0.le, -k);
            out.u = shift_chain_map(t0.u, -k);
            out.ge = shift_complex(t0.ge, -k);
            out.v = shift_chain_map(t0.v, -k);
            // Shifting a triangle by k flips the connecting map by (-1)^k.
            out.w = shift_chain_map(t0.w, -k);
            if (k % 2 != 0) out.w = scale_chain(out.w, mpq_class(-1));
        } else if (i == 0) {
            out = truncate0(X);
        } else {
            out = truncate_tilted(i, X);
        }
        trunc_memo_.emplace(std::move(key), out);
        return out;
    }

    /// H_i^k(X) as an object of D concentrated in t-degree k (i.e. an object
    /// of H_i[-k]); heart_cohomology shifts it into the heart itself.
    Complex t_cohomology(int i, const Complex& X, int k) {
        Truncation below = truncate(i, X, k);
        return truncate(i, below.le, k - 1).ge;
    }
    Complex heart_cohomology(int i, const Complex& X, int k) {
        return shift_complex(t_cohomology(i, X, k), k);
    }

    /// Torsion decomposition of C in the heart H_i: a short exact sequence
    ///   0 -> tors -> C -> free -> 0
    /// with Hom(T, free) = 0 and tors built by exhausting the images of maps
    /// from sums of copies of T.
    struct Torsion {
        Complex tors;
        ChainMap incl;  // tors -> C
        Complex free;
        ChainMap proj;  // C -> free
    };

    Torsion torsion_decompose(int i, const Complex& Cin) {
        Complex C = Cin.normalized();
        auto key = std::make_pair(i, C.key());
        auto it = tors_memo_.find(key);
        if (it != tors_memo_.end()) return it->second;

        if (i == 0 && !C.is_empty()) {
            Torsion out0 = torsion_split0(C);
            tors_memo_.emplace(std::move(key), out0);
            return out0;
        }

        Torsion out;
        Complex Q = C;
        ChainMap proj = identity_chain_map(C);
        for (int round = 0;; ++round) {
            if (round > 64) throw std::logic_error("torsion_decompose: no convergence");
            auto basis = tp_.rhom_basis(Q, 0);
            if (basis.empty()) break;
            // Quotient by the image of one map T -> Q at a time; a nonzero
            // derived map between heart objects has nonzero image in the
            // heart, so Q strictly shrinks and the loop terminates.
            const Complex& PT = tp_.replacement().P;
            ConeResult z = cone(basis[0], PT, Q);
            MinimizedComplex mz = minimize_proj(z.C);
            Truncation t = truncate(i, mz.Y, -1);
            ChainMap into = compose_chain(mz.to, z.incl, Q, z.C, mz.Y);
            ChainMap step = compose_chain(t.v, into, Q, mz.Y, t.ge);
            proj = compose_chain(step, proj, C, Q, t.ge);
            Q = t.ge;
            if (Q.is_zero_object() || is_acyclic(Q)) {
                Q = Complex(*alg_);
                break;
            }
        }
        out.free = Q;
        out.proj = proj;
        if (out.free.normalized().is_empty()) {
            out.tors = C;
            out.incl = identity_chain_map(C);
        } else {
            // Kernel of C -> free inside H_i, via tau_i^{<=-1} of the cone.
            ConeResult z = cone(out.proj, C, out.free);
            MinimizedComplex mz = minimize_proj(z.C);
            Truncation t = truncate(i, mz.Y, -1);
            ChainMap outof = compose_chain(z.proj, mz.from, mz.Y, z.C, shift_complex(C, 1));
            out.tors = shift_complex(t.le, -1);
            out.incl = shift_chain_map(compose_chain(outof, t.u, t.le, mz.Y, shift_complex(C, 1)), -1);
        }
        tors_memo_.emplace(std::move(key), out);
        return out;
    }

    /// C in the torsion class X_i of H_i (C must lie in H_i).
    bool in_torsion(int i, const Complex& C) {
        if (C.normalized().is_empty() || is_acyclic(C)) return true;
        return torsion_decompose(i, C).free.normalized().is_empty();
    }
    /// C in the torsion-free class Y_i = Ker Hom(T, -) of H_i.
    bool in_torsion_free(const Complex& C) { return rhom_dim(C, 0) == 0; }

  private:
    static Representation sum_up(const BoundQuiverAlgebra& alg,
                                 const std::vector<Representation>& parts) {
        std::vector<const Representation*> p;
        for (auto& x : parts) p.push_back(&x);
        return direct_sum(alg, p).rep;
    }

    // -- level 0 torsion pair: trace of T at the module level -----------------

    struct Resolved {
        Complex P;
        ModuleMorphism aug;  // P^0 -> N
    };

    Resolved resolve_aug(const Representation& N) const {
        Complex NX = Complex::from_module(*alg_, N, 0);
        ProjObject pl = projectivize(NX, false);
        MinimizedComplex m = minimize_proj(pl.P);
        ChainMap q1 = compose_chain(pl.q, m.from, m.Y, pl.P, NX);
        return {m.Y, q1.comp_at(0, m.Y, NX)};
    }

    /// Lift a module map phi: M -> N to a chain map between projective
    /// resolutions P (augmentation p0: P^0 -> M) and Q (q0: Q^0 -> N), with
    /// q0 . psi^0 = phi . p0 on the nose.
    ChainMap lift_resolution_map(const Complex& P, const ModuleMorphism& p0,
                                 const Complex& Q, const ModuleMorphism& q0,
                                 const Representation& N, const ModuleMorphism& phi) const {
        const Quiver& q = alg_->quiver();
        const FieldSpec& fld = alg_->field();
        BlockLinearSystem sys(fld);
        DegVar psi = add_var(sys, P, Q, 0);
        auto ident = [&](int n) { return Matrix::identity(n, fld); };
        for (int i = std::min(P.lo(), Q.lo()) - 1; i <= std::max(P.hi(), Q.hi()); ++i)
            for (int w = 0; w < q.nv; ++w) {
                int rows = Q.term(i + 1).dim(w), cols = P.term(i).dim(w);
                if (!rows || !cols) continue;
                std::vector<BlockLinearSystem::Term> terms;
                add_term(psi, i, w, Q.diff(i).comp[w], ident(cols), terms);
                add_term(psi, i + 1, w, ident(rows).scaled(-1), P.diff(i).comp[w], terms);
                if (!terms.empty()) sys.add_equation(terms, Matrix(rows, cols, fld));
            }
        ModuleMorphism rhs = compose(phi, p0);
        for (int w = 0; w < q.nv; ++w) {
            int rows = N.dim(w), cols = P.term(0).dim(w);
            if (!rows || !cols) continue;
            std::vector<BlockLinearSystem::Term> terms;
            add_term(psi, 0, w, q0.comp[w], ident(cols), terms);
            if (!terms.empty() || !rhs.comp[w].is_zero()) sys.add_equation(terms, rhs.comp[w]);
        }
        auto sol = sys.solve();
        if (!sol) throw std::logic_error("lift_resolution_map: no strict lift");
        ChainMap out{P.lo(), {}};
        for (int i = P.lo(); i <= P.hi(); ++i) {
            ModuleMorphism m;
            for (int w = 0; w < q.nv; ++w) {
                auto bt = psi.blk.find({i, w});
                m.comp.push_back(bt == psi.blk.end()
                                     ? Matrix(Q.term(i).dim(w), P.term(i).dim(w), fld)
                                     : (*sol)[bt->second]);
            }
            out.comps.push_back(std::move(m));
        }
        if (!verify_chain_map(P, out, Q))
            throw std::logic_error("lift_resolution_map: lift is not a chain map");
        return out;
    }

    /// Torsion decomposition in the module category: the torsion part of
    /// M = H^0(C) is the trace of T, and incl/proj are lifted to the minimal
    /// resolutions.  C must be a minimal projective resolution of a module.
    Torsion torsion_split0(const Complex& C) {
        QuotModule aug = cokernel(C.diff(-1), C.term(0));
        const Representation& M = aug.rep;
        SubModule tr = trace_submodule(tp_.module(), M);
        Torsion out;
        if (tr.rep.total_dim() == M.total_dim()) {
            out.tors = C;
            out.incl = identity_chain_map(C);
            out.free = Complex(*alg_);
            out.proj = ChainMap{C.lo(), {}};
            return out;
        }
        QuotModule fr = cokernel(tr.incl, M);
        Resolved rf = resolve_aug(fr.rep);
        out.free = rf.P;
        out.proj = lift_resolution_map(C, aug.proj, rf.P, rf.aug, fr.rep, fr.proj);
        if (tr.rep.total_dim() == 0) {
            out.tors = Complex(*alg_);
            out.incl = ChainMap{C.lo(), {}};
            return out;
        }
        Resolved rt = resolve_aug(tr.rep);
        out.tors = rt.P;
        out.incl = lift_resolution_map(rt.P, rt.aug, C, aug.proj, M, tr.incl);
        return out;
    }

    // -- level 0: smart truncation followed by projective replacement --------

    Truncation truncate0(const Complex& X) {
        Truncation t = smart_truncate(X, 0);
        ProjObject pl = projectivize(t.le, false);
        MinimizedComplex ml = minimize_proj(pl.P);
        ChainMap q1 = compose_chain(t.u, pl.q, pl.P, t.le, X);  // pl.P -> X
        Truncation out;
        out.le = ml.Y;
        out.u = compose_chain(q1, ml.from, ml.Y, pl.P, X);
        ConeResult c = cone(out.u, out.le, X);
        MinimizedComplex mg = minimize_proj(c.C);
        out.ge = mg.Y;
        out.v = compose_chain(mg.to, c.incl, X, c.C, mg.Y);
        out.w = compose_chain(c.proj, mg.from, mg.Y, c.C, shift_complex(out.le, 1));
        return out;
    }

    // -- level i >= 1: the tilt of level i-1 ----------------------------------

    Truncation truncate_tilted(int i, const Complex& X) {
        // A = tau_{i-1}^{<=0} X, G = H^0_{i-1}(X) with torsion-free quotient
        // Gf.  By the octahedral axiom the lower tilted truncation is the
        // fiber of the composite rho : A -> G -> Gf, so E = cone(rho)[-1] and
        // the comparison map h : E -> A is the cone projection -- everything
        // is a strict chain map.
        Truncation tA = truncate(i - 1, X, 0);
        const Complex& A = tA.le;
        Truncation tB = truncate(i - 1, A, -1);
        Torsion td = torsion_decompose(i - 1, tB.ge);
        ChainMap rho = compose_chain(td.proj, tB.v, A, tB.ge, td.free);  // A -> Gf
        ConeResult cr = cone(rho, A, td.free);
        Complex crm = shift_complex(cr.C, -1);
        MinimizedComplex mE = minimize_proj(crm);
        Complex E = mE.Y;
        ChainMap h = compose_chain(shift_chain_map(cr.proj, -1), mE.from, E, crm, A);

        Truncation out;
        out.le = E;
        out.u = compose_chain(tA.u, h, E, A, X);
        ConeResult cg = cone(out.u, E, X);
        MinimizedComplex mg = minimize_proj(cg.C);
        out.ge = mg.Y;
        out.v = compose_chain(mg.to, cg.incl, X, cg.C, mg.Y);
        out.w = compose_chain(cg.proj, mg.from, mg.Y, cg.C, shift_complex(E, 1));
        if (!in_coaisle(i, out.ge, 1))
            throw std::logic_error("truncate: upper part escaped the co-aisle");
        return out;
    }

    struct DegVar {
        const Complex* X;
        const Complex* Y;
        int deg;  // components X^i -> Y^{i+deg}
        std::map<std::pair<int, int>, int> blk;
    };

    void add_term(const DegVar& v, int i, int w, Matrix L, Matrix R,
                  std::vector<BlockLinearSystem::Term>& terms) const {
        auto it = v.blk.find({i, w});
        if (it != v.blk.end() && !L.is_zero() && !R.is_zero())
            terms.push_back({std::move(L), it->second, std::move(R)});
    }

    /// Unknown degree-homogeneous map with per-degree module-morphism
    /// constraints already imposed.
    DegVar add_var(BlockLinearSystem& sys, const Complex& X, const Complex& Y, int deg) const {
        const Quiver& q = alg_->quiver();
        const FieldSpec& fld = alg_->field();
        DegVar v{&X, &Y, deg, {}};
        for (int i = X.lo(); i <= X.hi(); ++i)
            for (int w = 0; w < q.nv; ++w)
                if (X.term(i).dim(w) && Y.term(i + deg).dim(w))
                    v.blk[{i, w}] = sys.add_block(Y.term(i + deg).dim(w), X.term(i).dim(w));
        for (int i = X.lo(); i <= X.hi(); ++i)
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                int s = q.arrows[a].s, t = q.arrows[a].t;
                int rows = Y.term(i + deg).dim(t), cols = X.term(i).dim(s);
                if (!rows || !cols) continue;
                std::vector<BlockLinearSystem::Term> terms;
                add_term(v, i, s, Y.term(i + deg).map(static_cast<int>(a)),
                         Matrix::identity(X.term(i).dim(s), fld), terms);
                add_term(v, i, t, Matrix::identity(rows, fld).scaled(-1),
                         X.term(i).map(static_cast<int>(a)), terms);
                if (!terms.empty()) sys.add_equation(terms, Matrix(rows, cols, fld));
            }
        return v;
    }

    const BoundQuiverAlgebra* alg_;
    std::vector<Representation> summands_;
    TiltingPair tp_;
    std::map<std::tuple<int, int, std::string>, Truncation> trunc_memo_;
    std::map<std::pair<int, std::string>, Torsion> tors_memo_;
    std::map<std::pair<int, std::string>, int> rhom_memo_;
};

}  // namespace ttower
