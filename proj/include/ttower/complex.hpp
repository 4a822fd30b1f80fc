#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ttower/linsys.hpp"
#include "ttower/rep.hpp"

namespace ttower {

/// Bounded cochain complex of representations.  Terms live in degrees
/// lo .. lo+terms-1; accessors treat all other degrees as zero.  Complexes
/// are not trimmed automatically; normalized() drops zero end terms.
class Complex {
  public:
    Complex() = default;
    explicit Complex(const BoundQuiverAlgebra& alg) : alg_(&alg), zero_(Representation::zero(alg)) {}

    Complex(const BoundQuiverAlgebra& alg, int lo, std::vector<Representation> terms,
            std::vector<ModuleMorphism> diffs, bool check = true)
        : alg_(&alg), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)),
          zero_(Representation::zero(alg)) {
        if (!terms_.empty() && diffs_.size() != terms_.size() - 1)
            throw std::invalid_argument("Complex: differential count mismatch");
        if (check) validate();
    }

    static Complex from_module(const BoundQuiverAlgebra& alg, Representation M, int degree) {
        if (M.is_zero()) return Complex(alg);
        return Complex(alg, degree, {std::move(M)}, {}, false);
    }

    const BoundQuiverAlgebra& algebra() const { return *alg_; }
    const FieldSpec& field() const { return alg_->field(); }

    bool is_empty() const { return terms_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }

    const Representation& term(int i) const {
        if (terms_.empty() || i < lo_ || i > hi()) return zero_;
        return terms_[i - lo_];
    }

    ModuleMorphism diff(int i) const {
        if (!terms_.empty() && i >= lo_ && i < hi()) return diffs_[i - lo_];
        return zero_morphism(term(i), term(i + 1));
    }

    int total_dim() const {
        int s = 0;
        for (auto& t : terms_) s += t.total_dim();
        return s;
    }
    bool is_zero_object() const { return total_dim() == 0; }

    Complex normalized() const {
        int a = lo_, b = hi();
        while (a <= b && term(a).is_zero()) ++a;
        while (b >= a && term(b).is_zero()) --b;
        if (a > b) return Complex(*alg_);
        std::vector<Representation> t(terms_.begin() + (a - lo_), terms_.begin() + (b - lo_ + 1));
        std::vector<ModuleMorphism> d(diffs_.begin() + (a - lo_), diffs_.begin() + (b - lo_));
        return Complex(*alg_, a, std::move(t), std::move(d), false);
    }

    /// Canonical serialization (of the normalized complex) for caching and
    /// byte-stable reports.
    std::string key() const {
        Complex n = normalized();
        std::ostringstream os;
        os << "lo=" << (n.is_empty() ? 0 : n.lo_) << ";";
        for (int i = n.lo_; i <= n.hi() && !n.is_empty(); ++i) {
            os << "[" << i << ":";
            for (int d : n.term(i).dims()) os << d << ",";
            for (size_t a = 0; a < alg_->quiver().arrows.size(); ++a) {
                const Matrix& m = n.term(i).map(static_cast<int>(a));
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) os << m.at(r, c).get_str() << " ";
            }
            os << "|";
            if (i < n.hi())
                for (auto& m : n.diff(i).comp)
                    for (int r = 0; r < m.rows(); ++r)
                        for (int c = 0; c < m.cols(); ++c) os << m.at(r, c).get_str() << " ";
            os << "]";
        }
        return os.str();
    }

    void validate() const {
        for (size_t k = 0; k < diffs_.size(); ++k) {
            if (!verify_morphism(terms_[k], diffs_[k], terms_[k + 1]))
                throw std::invalid_argument("Complex: differential is not a morphism");
            if (k + 1 < diffs_.size() && !compose(diffs_[k + 1], diffs_[k]).is_zero())
                throw std::invalid_argument("Complex: d^2 != 0");
        }
    }

  private:
    const BoundQuiverAlgebra* alg_ = nullptr;
    int lo_ = 0;
    std::vector<Representation> terms_;
    std::vector<ModuleMorphism> diffs_;
    Representation zero_;
};

/// Degree-wise map of complexes.  Components are stored for degrees
/// lo .. lo+comps-1; comp_at fills in zero morphisms elsewhere.
struct ChainMap {
    int lo = 0;
    std::vector<ModuleMorphism> comps;

    ModuleMorphism comp_at(int i, const Complex& X, const Complex& Y) const {
        if (i >= lo && i < lo + static_cast<int>(comps.size())) return comps[i - lo];
        return zero_morphism(X.term(i), Y.term(i));
    }

    bool is_zero() const {
        for (auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }
};

inline ChainMap zero_chain_map() { return ChainMap{}; }

inline ChainMap identity_chain_map(const Complex& X) {
    ChainMap f{X.lo(), {}};
    for (int i = X.lo(); i <= X.hi(); ++i) f.comps.push_back(identity_morphism(X.term(i)));
    return f;
}

inline bool verify_chain_map(const Complex& X, const ChainMap& f, const Complex& Y) {
    int a = std::min(X.lo(), Y.lo()) - 1, b = std::max(X.hi(), Y.hi()) + 1;
    for (int i = a; i <= b; ++i) {
        ModuleMorphism fi = f.comp_at(i, X, Y);
        if (!verify_morphism(X.term(i), fi, Y.term(i))) return false;
        ModuleMorphism lhs = compose(Y.diff(i), fi);
        ModuleMorphism rhs = compose(f.comp_at(i + 1, X, Y), X.diff(i));
        if (!sub(lhs, rhs).is_zero()) return false;
    }
    return true;
}

inline ChainMap compose_chain(const ChainMap& g, const ChainMap& f, const Complex& X,
                              const Complex& Y, const Complex& Z) {
    int a = std::min({X.lo(), Y.lo(), Z.lo()}), b = std::max({X.hi(), Y.hi(), Z.hi()});
    ChainMap h{a, {}};
    for (int i = a; i <= b; ++i) h.comps.push_back(compose(g.comp_at(i, Y, Z), f.comp_at(i, X, Y)));
    return h;
}

inline ChainMap add_chain(const ChainMap& f, const ChainMap& g, const Complex& X, const Complex& Y) {
    int a = std::min(X.lo(), Y.lo()), b = std::max(X.hi(), Y.hi());
    ChainMap h{a, {}};
    for (int i = a; i <= b; ++i) h.comps.push_back(add(f.comp_at(i, X, Y), g.comp_at(i, X, Y)));
    return h;
}

inline ChainMap scale_chain(const ChainMap& f, const mpq_class& c) {
    ChainMap h{f.lo, {}};
    for (auto& m : f.comps) h.comps.push_back(scale(m, c));
    return h;
}

/// X[k]^i = X^{i+k}, with differential (-1)^k d.
inline Complex shift_complex(const Complex& X, int k) {
    if (X.is_empty()) return X;
    std::vector<Representation> terms;
    std::vector<ModuleMorphism> diffs;
    for (int i = X.lo(); i <= X.hi(); ++i) {
        terms.push_back(X.term(i));
        if (i < X.hi()) diffs.push_back(k % 2 == 0 ? X.diff(i) : scale(X.diff(i), mpq_class(-1)));
    }
    return Complex(X.algebra(), X.lo() - k, std::move(terms), std::move(diffs), false);
}

/// The same components give a chain map X[k] -> Y[k].
inline ChainMap shift_chain_map(const ChainMap& f, int k) {
    ChainMap g = f;
    g.lo -= k;
    return g;
}

/// Mapping cone of f : X -> Y, with the triangle maps
///   Y --incl--> C --proj--> X[1].
/// C^i = X^{i+1} + Y^i with differential [[-d_X, 0], [f, d_Y]].
struct ConeResult {
    Complex C;
    ChainMap incl;  // Y -> C
    ChainMap proj;  // C -> X[1]
    // Raw per-degree pieces of C^i = X^{i+1} + Y^i (not chain maps):
    int parts_lo = 0;
    std::vector<DirectSum> parts;
};

inline ConeResult cone(const ChainMap& f, const Complex& X, const Complex& Y) {
    const BoundQuiverAlgebra& alg = X.algebra();
    int a = std::min(X.lo() - 1, Y.lo()), b = std::max(X.hi() - 1, Y.hi());
    ConeResult out;
    out.parts_lo = a;
    std::vector<Representation> terms;
    for (int i = a; i <= b; ++i) {
        const Representation& xs = X.term(i + 1);
        const Representation& ys = Y.term(i);
        out.parts.push_back(direct_sum(alg, {&xs, &ys}));
        terms.push_back(out.parts.back().rep);
    }
    std::vector<ModuleMorphism> diffs;
    for (int i = a; i < b; ++i) {
        const DirectSum& cur = out.parts[i - a];
        const DirectSum& nxt = out.parts[i - a + 1];
        ModuleMorphism d =
            add(add(compose(nxt.incl[0], compose(scale(X.diff(i + 1), mpq_class(-1)), cur.proj[0])),
                    compose(nxt.incl[1], compose(f.comp_at(i + 1, X, Y), cur.proj[0]))),
                compose(nxt.incl[1], compose(Y.diff(i), cur.proj[1])));
        diffs.push_back(std::move(d));
    }
    out.C = Complex(alg, a, std::move(terms), std::move(diffs), false);
    out.incl = ChainMap{a, {}};
    out.proj = ChainMap{a, {}};
    for (int i = a; i <= b; ++i) {
        out.incl.comps.push_back(out.parts[i - a].incl[1]);
        out.proj.comps.push_back(out.parts[i - a].proj[0]);
    }
    return out;
}

/// H^i(X) = ker d^i / im d^{i-1}, as an abstract representation.
inline Representation cohomology(const Complex& X, int i) {
    SubModule K = kernel(X.term(i), X.diff(i));
    // Factor d^{i-1} through the kernel inclusion.
    ModuleMorphism g;
    for (size_t v = 0; v < K.incl.comp.size(); ++v) {
        auto sol = K.incl.comp[v].solve_many(X.diff(i - 1).comp[v]);
        if (!sol) throw std::logic_error("cohomology: d^{i-1} does not land in ker d^i");
        g.comp.push_back(*sol);
    }
    return cokernel(g, K.rep).rep;
}

inline bool is_acyclic(const Complex& X) {
    for (int i = X.lo(); i <= X.hi(); ++i)
        if (!cohomology(X, i).is_zero()) return false;
    return true;
}

inline bool is_quasi_iso(const Complex& X, const ChainMap& f, const Complex& Y) {
    return is_acyclic(cone(f, X, Y).C);
}

/// Term-wise direct sum of complexes, with inclusion and projection chain maps.
struct ComplexSum {
    Complex C;
    std::vector<ChainMap> incl, proj;
};

inline ComplexSum direct_sum_complexes(const BoundQuiverAlgebra& alg,
                                       const std::vector<const Complex*>& parts) {
    ComplexSum out;
    if (parts.empty()) {
        out.C = Complex(alg);
        return out;
    }
    int a = parts[0]->lo(), b = parts[0]->hi();
    for (auto* p : parts) {
        a = std::min(a, p->lo());
        b = std::max(b, p->hi());
    }
    std::vector<Representation> terms;
    std::vector<DirectSum> sums;
    for (int i = a; i <= b; ++i) {
        std::vector<const Representation*> comps;
        for (auto* p : parts) comps.push_back(&p->term(i));
        sums.push_back(direct_sum(alg, comps));
        terms.push_back(sums.back().rep);
    }
    std::vector<ModuleMorphism> diffs;
    for (int i = a; i < b; ++i) {
        ModuleMorphism d = zero_morphism(terms[i - a], terms[i - a + 1]);
        for (size_t k = 0; k < parts.size(); ++k)
            d = add(d, compose(sums[i - a + 1].incl[k],
                               compose(parts[k]->diff(i), sums[i - a].proj[k])));
        diffs.push_back(std::move(d));
    }
    out.C = Complex(alg, a, std::move(terms), std::move(diffs), false);
    for (size_t k = 0; k < parts.size(); ++k) {
        ChainMap in{a, {}}, pr{a, {}};
        for (int i = a; i <= b; ++i) {
            in.comps.push_back(sums[i - a].incl[k]);
            pr.comps.push_back(sums[i - a].proj[k]);
        }
        out.incl.push_back(std::move(in));
        out.proj.push_back(std::move(pr));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projective replacement
// ---------------------------------------------------------------------------

struct ProjObject {
    Complex P;   // bounded complex of projectives
    ChainMap q;  // quasi-isomorphism P -> X
};

/// Complex form of a minimal projective resolution of a module placed in
/// degree m, with its augmentation quasi-isomorphism.
inline ProjObject resolution_complex(const BoundQuiverAlgebra& alg, const Representation& M,
                                     int m) {
    ProjObject out;
    if (M.is_zero()) {
        out.P = Complex(alg);
        return out;
    }
    ProjResolution res = projective_resolution(M);
    int len = static_cast<int>(res.P.size()) - 1;
    std::vector<Representation> terms;
    std::vector<ModuleMorphism> diffs;
    for (int k = len; k >= 0; --k) {
        terms.push_back(res.P[k]);
        if (k > 0) diffs.push_back(res.d[k - 1]);
    }
    out.P = Complex(alg, m - len, std::move(terms), std::move(diffs), false);
    out.q = ChainMap{m, {res.aug}};
    return out;
}

/// Projective replacement of a bounded complex, by induction on the number of
/// terms: X is literally the cone of w : X^{lo}[-lo-1] -> (X in degrees > lo),
/// so replace both pieces, lift w through the quasi-isomorphisms (with an
/// explicit homotopy), and take the cone of the lift.
inline ProjObject projectivize(const Complex& Xin, bool verify = true) {
    const BoundQuiverAlgebra& alg = Xin.algebra();
    const FieldSpec fld = alg.field();
    Complex X = Xin.normalized();
    if (X.is_empty()) return ProjObject{Complex(alg), ChainMap{}};
    if (X.lo() == X.hi()) return resolution_complex(alg, X.term(X.lo()), X.lo());

    int lo = X.lo();
    // A = the subcomplex in degrees > lo.
    std::vector<Representation> aterms;
    std::vector<ModuleMorphism> adiffs;
    for (int i = lo + 1; i <= X.hi(); ++i) {
        aterms.push_back(X.term(i));
        if (i < X.hi()) adiffs.push_back(X.diff(i));
    }
    Complex A(alg, lo + 1, std::move(aterms), std::move(adiffs), false);
    ProjObject PA = projectivize(A, false);
    ProjObject PB = resolution_complex(alg, X.term(lo), lo + 1);

    // w : X^{lo}[-lo-1] -> A is d^{lo} in degree lo+1; composed with the
    // augmentation it gives the map to lift.
    ModuleMorphism waug = compose(X.diff(lo), PB.q.comps.empty() ? ModuleMorphism{}
                                                                 : PB.q.comps[0]);
    // Solve for a chain map wt : PB.P -> PA.P and homotopy h with
    //   PA.q . wt - (w . PB.q) = d_A h + h d_PB.
    BlockLinearSystem sys(fld);
    const Quiver& qv = alg.quiver();
    int wl = std::min(PB.P.lo(), PA.P.lo()), wh = std::max(PB.P.hi(), PA.P.hi());
    // Blocks: wt[i][v] and h[i][v]; -1 marks absent (zero-dimensional) blocks.
    std::map<std::pair<int, int>, int> wt_blk, h_blk;
    for (int i = wl; i <= wh; ++i)
        for (int v = 0; v < qv.nv; ++v) {
            if (PA.P.term(i).dim(v) && PB.P.term(i).dim(v))
                wt_blk[{i, v}] = sys.add_block(PA.P.term(i).dim(v), PB.P.term(i).dim(v));
            if (A.term(i - 1).dim(v) && PB.P.term(i).dim(v))
                h_blk[{i, v}] = sys.add_block(A.term(i - 1).dim(v), PB.P.term(i).dim(v));
        }
    auto blk_term = [&](std::map<std::pair<int, int>, int>& blks, int i, int v, const Matrix& L,
                        const Matrix& R, std::vector<BlockLinearSystem::Term>& terms) {
        auto it = blks.find({i, v});
        if (it != blks.end() && !L.is_zero() && !R.is_zero())
            terms.push_back({L, it->second, R});
    };
    auto ident = [&](int n) { return Matrix::identity(n, fld); };
    // (a) each wt^i is a module morphism;  (d) so is each h^i.
    for (int i = wl; i <= wh; ++i)
        for (size_t a = 0; a < qv.arrows.size(); ++a) {
            int s = qv.arrows[a].s, t = qv.arrows[a].t;
            {
                std::vector<BlockLinearSystem::Term> terms;
                blk_term(wt_blk, i, s, PA.P.term(i).map(static_cast<int>(a)),
                         ident(PB.P.term(i).dim(s)), terms);
                blk_term(wt_blk, i, t, ident(PA.P.term(i).dim(t)).scaled(-1),
                         PB.P.term(i).map(static_cast<int>(a)), terms);
                if (!terms.empty())
                    sys.add_equation(terms,
                                     Matrix(PA.P.term(i).dim(t), PB.P.term(i).dim(s), fld));
            }
            {
                std::vector<BlockLinearSystem::Term> terms;
                blk_term(h_blk, i, s, A.term(i - 1).map(static_cast<int>(a)),
                         ident(PB.P.term(i).dim(s)), terms);
                blk_term(h_blk, i, t, ident(A.term(i - 1).dim(t)).scaled(-1),
                         PB.P.term(i).map(static_cast<int>(a)), terms);
                if (!terms.empty())
                    sys.add_equation(terms, Matrix(A.term(i - 1).dim(t), PB.P.term(i).dim(s), fld));
            }
        }
    // (b) chain condition: d_PA wt^i - wt^{i+1} d_PB = 0.
    for (int i = wl - 1; i <= wh; ++i)
        for (int v = 0; v < qv.nv; ++v) {
            int rows = PA.P.term(i + 1).dim(v), cols = PB.P.term(i).dim(v);
            if (!rows || !cols) continue;
            std::vector<BlockLinearSystem::Term> terms;
            blk_term(wt_blk, i, v, PA.P.diff(i).comp[v], ident(cols), terms);
            blk_term(wt_blk, i + 1, v, ident(rows).scaled(-1), PB.P.diff(i).comp[v], terms);
            if (!terms.empty()) sys.add_equation(terms, Matrix(rows, cols, fld));
        }
    // (c) PA.q wt - d_A h - h d_PB = w . PB.q.
    ChainMap wq{lo + 1, {waug}};
    for (int i = wl - 1; i <= wh; ++i)
        for (int v = 0; v < qv.nv; ++v) {
            int rows = A.term(i).dim(v), cols = PB.P.term(i).dim(v);
            if (!rows || !cols) continue;
            std::vector<BlockLinearSystem::Term> terms;
            blk_term(wt_blk, i, v, PA.q.comp_at(i, PA.P, A).comp[v], ident(cols), terms);
            blk_term(h_blk, i, v, A.diff(i - 1).comp[v].scaled(-1), ident(cols), terms);
            blk_term(h_blk, i + 1, v, ident(rows).scaled(-1), PB.P.diff(i).comp[v], terms);
            Matrix rhs = wq.comp_at(i, PB.P, A).comp[v];
            if (!terms.empty() || !rhs.is_zero()) sys.add_equation(terms, rhs);
        }
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("projectivize: lift system inconsistent");
    auto get = [&](std::map<std::pair<int, int>, int>& blks, int i, int v, int rows, int cols) {
        auto it = blks.find({i, v});
        return it == blks.end() ? Matrix(rows, cols, fld) : (*sol)[it->second];
    };
    ChainMap wt{wl, {}};
    for (int i = wl; i <= wh; ++i) {
        ModuleMorphism m;
        for (int v = 0; v < qv.nv; ++v)
            m.comp.push_back(get(wt_blk, i, v, PA.P.term(i).dim(v), PB.P.term(i).dim(v)));
        wt.comps.push_back(std::move(m));
    }

    ConeResult C = cone(wt, PB.P, PA.P);
    // q : cone(wt) -> X, blockwise [augmentation | PA.q] with the homotopy
    // correction h on the PB part in degrees above lo.
    ChainMap q{C.C.lo(), {}};
    for (int i = C.C.lo(); i <= C.C.hi(); ++i) {
        const DirectSum& parts = C.parts[i - C.parts_lo];
        ModuleMorphism from_pb;
        if (i == lo) {
            from_pb = PB.q.comp_at(i + 1, PB.P, Complex::from_module(alg, X.term(lo), lo + 1));
        } else {
            ModuleMorphism h;
            for (int v = 0; v < qv.nv; ++v)
                h.comp.push_back(get(h_blk, i + 1, v, A.term(i).dim(v), PB.P.term(i + 1).dim(v)));
            from_pb = h;
        }
        ModuleMorphism from_pa = i == lo ? zero_morphism(PA.P.term(i), X.term(i))
                                         : PA.q.comp_at(i, PA.P, A);
        q.comps.push_back(add(compose(from_pb, parts.proj[0]), compose(from_pa, parts.proj[1])));
    }
    ProjObject out{C.C, q};
    if (verify && !is_quasi_iso(out.P, out.q, X))
        throw std::logic_error("projectivize: replacement is not a quasi-isomorphism");
    return out;
}

// ---------------------------------------------------------------------------
// Chain maps modulo homotopy
// ---------------------------------------------------------------------------

/// Basis of Hom_{K}(X, Y) = {chain maps}/{null-homotopic}, as explicit
/// representative chain maps.  When X is a bounded complex of projectives this
/// computes morphisms in the derived category.
inline std::vector<ChainMap> chain_maps_mod_homotopy(const Complex& X, const Complex& Y) {
    const BoundQuiverAlgebra& alg = X.algebra();
    const FieldSpec fld = alg.field();
    const Quiver& qv = alg.quiver();
    int l = std::max(X.lo(), Y.lo()), h = std::min(X.hi(), Y.hi());
    if (l > h) return {};

    // Coordinates: entries of f^i_v for i in [l, h], row-major.
    std::vector<int> off;
    int total = 0;
    std::vector<std::pair<int, int>> blocks;  // (degree, vertex)
    std::map<std::pair<int, int>, int> blk_of;
    for (int i = l; i <= h; ++i)
        for (int v = 0; v < qv.nv; ++v) {
            blk_of[{i, v}] = static_cast<int>(blocks.size());
            blocks.emplace_back(i, v);
            off.push_back(total);
            total += Y.term(i).dim(v) * X.term(i).dim(v);
        }
    auto entry = [&](int i, int v, int r, int c) {
        return off[blk_of.at({i, v})] + r * X.term(i).dim(v) + c;
    };

    std::vector<std::vector<mpq_class>> rows;
    auto push_zero_rows = [&](int n) {
        for (int k = 0; k < n; ++k) rows.emplace_back(total, mpq_class(0));
    };
    // Intertwining inside each degree.
    for (int i = l; i <= h; ++i)
        for (size_t a = 0; a < qv.arrows.size(); ++a) {
            int s = qv.arrows[a].s, t = qv.arrows[a].t;
            const Matrix& Xa = X.term(i).map(static_cast<int>(a));
            const Matrix& Ya = Y.term(i).map(static_cast<int>(a));
            int nr = Y.term(i).dim(t) * X.term(i).dim(s);
            if (!nr) continue;
            size_t base = rows.size();
            push_zero_rows(nr);
            int rix = 0;
            for (int r = 0; r < Y.term(i).dim(t); ++r)
                for (int c = 0; c < X.term(i).dim(s); ++c, ++rix) {
                    auto& row = rows[base + rix];
                    for (int k = 0; k < Y.term(i).dim(s); ++k)
                        row[entry(i, s, k, c)] = row[entry(i, s, k, c)] + Ya.at(r, k);
                    for (int k = 0; k < X.term(i).dim(t); ++k)
                        row[entry(i, t, r, k)] = row[entry(i, t, r, k)] - Xa.at(k, c);
                }
        }
    // Chain condition d_Y f^i = f^{i+1} d_X for i in [l-1, h].
    for (int i = l - 1; i <= h; ++i)
        for (int v = 0; v < qv.nv; ++v) {
            int nr = Y.term(i + 1).dim(v) * X.term(i).dim(v);
            if (!nr) continue;
            const Matrix dy = Y.diff(i).comp[v];
            const Matrix dx = X.diff(i).comp[v];
            size_t base = rows.size();
            push_zero_rows(nr);
            int rix = 0;
            for (int r = 0; r < Y.term(i + 1).dim(v); ++r)
                for (int c = 0; c < X.term(i).dim(v); ++c, ++rix) {
                    auto& row = rows[base + rix];
                    if (i >= l)
                        for (int k = 0; k < Y.term(i).dim(v); ++k)
                            row[entry(i, v, k, c)] = row[entry(i, v, k, c)] + dy.at(r, k);
                    if (i + 1 <= h)
                        for (int k = 0; k < X.term(i + 1).dim(v); ++k)
                            row[entry(i + 1, v, r, k)] = row[entry(i + 1, v, r, k)] - dx.at(k, c);
                }
        }

    Matrix sys = rows.empty() ? Matrix(0, total, fld) : Matrix::from_rows(rows, fld);
    Matrix K = sys.kernel_basis();
    if (K.cols() == 0) return {};

    // Null-homotopic subspace: images of h |-> d_Y h + h d_X over module
    // morphisms h^i : X^i -> Y^{i-1}.
    std::vector<Matrix> null_cols;
    for (int i = std::max(X.lo(), Y.lo() + 1); i <= std::min(X.hi(), Y.hi() + 1); ++i) {
        for (auto& hb : hom_basis(X.term(i), Y.term(i - 1))) {
            Matrix colv(total, 1, fld);
            ModuleMorphism up = compose(Y.diff(i - 1), hb);    // degree i part
            ModuleMorphism dn = compose(hb, X.diff(i - 1));    // degree i-1 part
            auto put = [&](int deg, const ModuleMorphism& m) {
                if (deg < l || deg > h) return;
                for (int v = 0; v < qv.nv; ++v)
                    for (int r = 0; r < m.comp[v].rows(); ++r)
                        for (int c = 0; c < m.comp[v].cols(); ++c)
                            colv.at(entry(deg, v, r, c), 0) =
                                colv.at(entry(deg, v, r, c), 0) + m.comp[v].at(r, c);
            };
            put(i, up);
            put(i - 1, dn);
            if (!colv.is_zero()) null_cols.push_back(std::move(colv));
        }
    }
    Matrix N_in_K(K.cols(), static_cast<int>(null_cols.size()), fld);
    for (size_t c = 0; c < null_cols.size(); ++c) {
        auto x = K.solve(null_cols[c]);
        if (!x) throw std::logic_error("null-homotopic map is not a chain map");
        for (int r = 0; r < K.cols(); ++r) N_in_K.at(r, static_cast<int>(c)) = x->at(r, 0);
    }
    auto [qm, e] = quotient_by_subspace(N_in_K);
    std::vector<ChainMap> out;
    for (int c = 0; c < e.cols(); ++c) {
        Matrix coords = K * e.col(c);
        ChainMap f{l, {}};
        for (int i = l; i <= h; ++i) {
            ModuleMorphism m;
            for (int v = 0; v < qv.nv; ++v) {
                Matrix mv(Y.term(i).dim(v), X.term(i).dim(v), fld);
                for (int r = 0; r < mv.rows(); ++r)
                    for (int cc = 0; cc < mv.cols(); ++cc) mv.at(r, cc) = coords.at(entry(i, v, r, cc), 0);
                m.comp.push_back(std::move(mv));
            }
            f.comps.push_back(std::move(m));
        }
        out.push_back(std::move(f));
    }
    return out;
}

/// Morphisms X -> Y[j] in the derived category: projectively replace X and
/// count chain maps modulo homotopy.  Returns the replacement used and the
/// representative maps P -> Y[j].
struct DerivedHom {
    ProjObject src;            // P -> X
    Complex shifted_target;    // Y[j]
    std::vector<ChainMap> basis;
};

inline DerivedHom derived_hom(const Complex& X, const Complex& Y, int j, bool verify = true) {
    DerivedHom out;
    out.src = projectivize(X, verify);
    out.shifted_target = shift_complex(Y, j);
    out.basis = chain_maps_mod_homotopy(out.src.P, out.shifted_target);
    return out;
}

inline int derived_hom_dim(const Complex& X, const Complex& Y, int j) {
    return static_cast<int>(derived_hom(X, Y, j, false).basis.size());
}

// ---------------------------------------------------------------------------
// Truncation for the natural t-structure
// ---------------------------------------------------------------------------

/// Truncation triangle  le --u--> X --v--> ge --w--> le[1]  with
/// le quasi-isomorphic to tau^{<=k} X and ge to tau^{>=k+1} X.
struct Truncation {
    Complex le;
    ChainMap u;  // le -> X
    Complex ge;
    ChainMap v;  // X -> ge
    ChainMap w;  // ge -> le[1]
};

inline Truncation smart_truncate(const Complex& Xin, int k) {
    Complex X = Xin.normalized();
    const BoundQuiverAlgebra& alg = X.algebra();
    Truncation out;
    if (X.is_empty() || k < X.lo()) {
        out.le = Complex(alg);
        out.u = ChainMap{};
        ConeResult c = cone(out.u, out.le, X);
        out.ge = c.C;
        out.v = c.incl;
        out.w = c.proj;
        return out;
    }
    // Subcomplex ... -> X^{k-1} -> ker d^k.
    SubModule K = kernel(X.term(k), X.diff(k));
    std::vector<Representation> terms;
    std::vector<ModuleMorphism> diffs;
    ChainMap u{X.lo(), {}};
    for (int i = X.lo(); i < k; ++i) {
        terms.push_back(X.term(i));
        u.comps.push_back(identity_morphism(X.term(i)));
        if (i < k - 1) diffs.push_back(X.diff(i));
    }
    if (k > X.lo()) {
        // Factor d^{k-1} through the kernel inclusion.
        ModuleMorphism g;
        for (size_t v = 0; v < K.incl.comp.size(); ++v) {
            auto sol = K.incl.comp[v].solve_many(X.diff(k - 1).comp[v]);
            if (!sol) throw std::logic_error("smart_truncate: factoring failed");
            g.comp.push_back(*sol);
        }
        diffs.push_back(std::move(g));
    }
    terms.push_back(K.rep);
    u.comps.push_back(K.incl);
    out.le = Complex(alg, X.lo(), std::move(terms), std::move(diffs), false);
    out.u = std::move(u);
    ConeResult c = cone(out.u, out.le, X);
    out.ge = c.C;
    out.v = c.incl;
    out.w = c.proj;
    return out;
}

}  // namespace ttower
