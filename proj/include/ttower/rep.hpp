#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "ttower/quiver.hpp"

namespace ttower {

/// Finite-dimensional representation of a bound quiver algebra: a dimension
/// per vertex and a matrix per arrow.  Relations of the algebra are enforced
/// at construction time unless the caller vouches for them.
class Representation {
  public:
    Representation() = default;
    Representation(const BoundQuiverAlgebra* alg, std::vector<int> dims, std::vector<Matrix> maps,
                   bool check = true)
        : alg_(alg), dims_(std::move(dims)), maps_(std::move(maps)) {
        const Quiver& q = alg_->quiver();
        if (static_cast<int>(dims_.size()) != q.nv || maps_.size() != q.arrows.size())
            throw std::invalid_argument("Representation: shape mismatch");
        for (size_t a = 0; a < maps_.size(); ++a)
            if (maps_[a].rows() != dims_[q.arrows[a].t] || maps_[a].cols() != dims_[q.arrows[a].s])
                throw std::invalid_argument("Representation: arrow matrix has wrong shape");
        if (check) check_relations();
    }

    static Representation zero(const BoundQuiverAlgebra& alg) {
        std::vector<int> d(alg.quiver().nv, 0);
        std::vector<Matrix> m;
        for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) m.emplace_back(0, 0, alg.field());
        return Representation(&alg, std::move(d), std::move(m), false);
    }

    const BoundQuiverAlgebra& algebra() const { return *alg_; }
    const FieldSpec& field() const { return alg_->field(); }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    const Matrix& map(int arrow) const { return maps_[arrow]; }

    int total_dim() const {
        int s = 0;
        for (int d : dims_) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Representation& o) const { return dims_ == o.dims_ && maps_ == o.maps_; }

    /// Matrix of the action of a path (dim at target x dim at source).
    Matrix path_action(const PathRef& p) const {
        int v = p.source;
        Matrix m = Matrix::identity(dims_[v], field());
        for (int a : p.arrows) {
            if (alg_->quiver().arrows[a].s != v)
                throw std::invalid_argument("path_action: path not composable");
            m = maps_[a] * m;
            v = alg_->quiver().arrows[a].t;
        }
        return m;
    }

    void check_relations() const {
        for (const Relation& r : alg_->relations()) {
            int s = r[0].second.source;
            int t = s;
            for (int a : r[0].second.arrows) t = alg_->quiver().arrows[a].t;
            Matrix acc(dims_[t], dims_[s], field());
            for (auto& [c, p] : r) acc = acc + path_action(p).scaled(c);
            if (!acc.is_zero())
                throw std::invalid_argument("Representation: defining relation not satisfied");
        }
    }

  private:
    const BoundQuiverAlgebra* alg_ = nullptr;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

/// Morphism of representations: one matrix per vertex.  Which representations
/// it connects is contextual; verify_morphism checks the intertwining law
/// against a concrete pair.
struct ModuleMorphism {
    std::vector<Matrix> comp;  // comp[v] : M_v -> N_v

    bool is_zero() const {
        for (auto& m : comp)
            if (!m.is_zero()) return false;
        return true;
    }
};

inline bool verify_morphism(const Representation& M, const ModuleMorphism& f,
                            const Representation& N) {
    const Quiver& q = M.algebra().quiver();
    if (f.comp.size() != static_cast<size_t>(q.nv)) return false;
    for (int v = 0; v < q.nv; ++v)
        if (f.comp[v].rows() != N.dim(v) || f.comp[v].cols() != M.dim(v)) return false;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& ar = q.arrows[a];
        if (!(f.comp[ar.t] * M.map(static_cast<int>(a)) - N.map(static_cast<int>(a)) * f.comp[ar.s])
                 .is_zero())
            return false;
    }
    return true;
}

inline ModuleMorphism zero_morphism(const Representation& M, const Representation& N) {
    ModuleMorphism f;
    for (int v = 0; v < M.algebra().quiver().nv; ++v)
        f.comp.emplace_back(N.dim(v), M.dim(v), M.field());
    return f;
}

inline ModuleMorphism identity_morphism(const Representation& M) {
    ModuleMorphism f;
    for (int v = 0; v < M.algebra().quiver().nv; ++v)
        f.comp.push_back(Matrix::identity(M.dim(v), M.field()));
    return f;
}

inline ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
    ModuleMorphism h;  // g after f
    for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
    return h;
}

inline ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g) {
    ModuleMorphism h;
    for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(f.comp[v] + g.comp[v]);
    return h;
}

inline ModuleMorphism sub(const ModuleMorphism& f, const ModuleMorphism& g) {
    ModuleMorphism h;
    for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(f.comp[v] - g.comp[v]);
    return h;
}

inline ModuleMorphism scale(const ModuleMorphism& f, const mpq_class& c) {
    ModuleMorphism h;
    for (auto& m : f.comp) h.comp.push_back(m.scaled(c));
    return h;
}

/// Flatten a morphism's matrices into one coordinate column (vertex order,
/// row-major within each vertex) — the coordinate system used for expressing
/// morphisms in a hom basis.
inline Matrix morphism_coords(const ModuleMorphism& f, const FieldSpec& fld) {
    int n = 0;
    for (auto& m : f.comp) n += m.rows() * m.cols();
    Matrix col(n, 1, fld);
    int k = 0;
    for (auto& m : f.comp)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) col.at(k++, 0) = m.at(i, j);
    return col;
}

/// Basis of Hom(M, N): kernel of the intertwining system
/// N_a f_{s(a)} = f_{t(a)} M_a over all arrows a.
inline std::vector<ModuleMorphism> hom_basis(const Representation& M, const Representation& N) {
    const Quiver& q = M.algebra().quiver();
    const FieldSpec f = M.field();
    // Unknown layout: for each vertex v, entries of f_v : M_v -> N_v row-major.
    std::vector<int> off(q.nv + 1, 0);
    for (int v = 0; v < q.nv; ++v) off[v + 1] = off[v] + N.dim(v) * M.dim(v);
    int nu = off[q.nv];

    std::vector<std::vector<mpq_class>> rows;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].s, t = q.arrows[a].t;
        const Matrix& Ma = M.map(static_cast<int>(a));
        const Matrix& Na = N.map(static_cast<int>(a));
        // Equation (i,j):  sum_k Na(i,k) f_s(k,j) - sum_k f_t(i,k) Ma(k,j) = 0
        for (int i = 0; i < N.dim(t); ++i)
            for (int j = 0; j < M.dim(s); ++j) {
                std::vector<mpq_class> row(nu, mpq_class(0));
                for (int k = 0; k < N.dim(s); ++k) {
                    int idx = off[s] + k * M.dim(s) + j;
                    row[idx] = row[idx] + Na.at(i, k);
                }
                for (int k = 0; k < M.dim(t); ++k) {
                    int idx = off[t] + i * M.dim(t) + k;
                    row[idx] = row[idx] - Ma.at(k, j);
                }
                rows.push_back(std::move(row));
            }
    }
    Matrix sys = rows.empty() ? Matrix(0, nu, f) : Matrix::from_rows(rows, f);
    Matrix K = sys.kernel_basis();

    std::vector<ModuleMorphism> out;
    for (int c = 0; c < K.cols(); ++c) {
        ModuleMorphism h;
        for (int v = 0; v < q.nv; ++v) {
            Matrix m(N.dim(v), M.dim(v), f);
            for (int i = 0; i < N.dim(v); ++i)
                for (int j = 0; j < M.dim(v); ++j) m.at(i, j) = K.at(off[v] + i * M.dim(v) + j, c);
            h.comp.push_back(std::move(m));
        }
        out.push_back(std::move(h));
    }
    return out;
}

inline int hom_dim(const Representation& M, const Representation& N) {
    return static_cast<int>(hom_basis(M, N).size());
}

/// Express a morphism in the coordinates of a given hom basis (canonical
/// solution).  Throws if it is not in the span.
inline std::vector<mpq_class> express_in_hom_basis(const ModuleMorphism& g,
                                                   const std::vector<ModuleMorphism>& basis,
                                                   const FieldSpec& fld) {
    Matrix target = morphism_coords(g, fld);
    Matrix A(target.rows(), static_cast<int>(basis.size()), fld);
    for (size_t c = 0; c < basis.size(); ++c) {
        Matrix bc = morphism_coords(basis[c], fld);
        for (int i = 0; i < bc.rows(); ++i) A.at(i, static_cast<int>(c)) = bc.at(i, 0);
    }
    auto x = A.solve(target);
    if (!x) throw std::logic_error("express_in_hom_basis: morphism not in span");
    std::vector<mpq_class> out(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) out[i] = x->at(static_cast<int>(i), 0);
    return out;
}

/// A submodule presented by its inclusion, or a quotient by its projection.
struct SubModule {
    Representation rep;
    ModuleMorphism incl;
};
struct QuotModule {
    Representation rep;
    ModuleMorphism proj;
};

/// Kernel of a morphism M -> N, with inclusion into M.
inline SubModule kernel(const Representation& M, const ModuleMorphism& phi) {
    const Quiver& q = M.algebra().quiver();
    std::vector<Matrix> inc;
    std::vector<int> dims;
    for (int v = 0; v < q.nv; ++v) {
        inc.push_back(phi.comp[v].kernel_basis());
        dims.push_back(inc.back().cols());
    }
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].s, t = q.arrows[a].t;
        auto sol = inc[t].solve_many(M.map(static_cast<int>(a)) * inc[s]);
        if (!sol) throw std::logic_error("kernel: not arrow-stable");
        maps.push_back(*sol);
    }
    SubModule out;
    out.rep = Representation(&M.algebra(), dims, std::move(maps), false);
    out.incl = ModuleMorphism{std::move(inc)};
    return out;
}

/// Submodule spanned by given columns at each vertex: close under the arrow
/// action, then present with inclusion.
inline SubModule submodule_from_spans(const Representation& M, std::vector<Matrix> spans) {
    const Quiver& q = M.algebra().quiver();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            int s = q.arrows[a].s, t = q.arrows[a].t;
            Matrix cand = Matrix::hstack(spans[t], M.map(static_cast<int>(a)) * spans[s]);
            Matrix nb = cand.column_space_basis();
            if (nb.cols() != spans[t].rank()) {
                spans[t] = nb;
                changed = true;
            }
        }
    }
    std::vector<Matrix> inc;
    std::vector<int> dims;
    for (int v = 0; v < q.nv; ++v) {
        inc.push_back(spans[v].column_space_basis());
        dims.push_back(inc.back().cols());
    }
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].s, t = q.arrows[a].t;
        auto sol = inc[t].solve_many(M.map(static_cast<int>(a)) * inc[s]);
        if (!sol) throw std::logic_error("submodule_from_spans: closure failed");
        maps.push_back(*sol);
    }
    SubModule out;
    out.rep = Representation(&M.algebra(), dims, std::move(maps), false);
    out.incl = ModuleMorphism{std::move(inc)};
    return out;
}

/// Image of a morphism M -> N as a submodule of N.
inline SubModule image(const ModuleMorphism& phi, const Representation& N) {
    std::vector<Matrix> spans;
    for (auto& m : phi.comp) spans.push_back(m.column_space_basis());
    return submodule_from_spans(N, std::move(spans));
}

/// Cokernel of a morphism into N, with projection from N.
inline QuotModule cokernel(const ModuleMorphism& phi, const Representation& N) {
    const Quiver& q = N.algebra().quiver();
    std::vector<Matrix> proj, sect;
    std::vector<int> dims;
    for (int v = 0; v < q.nv; ++v) {
        auto [qm, e] = quotient_by_subspace(phi.comp[v]);
        dims.push_back(qm.rows());
        proj.push_back(qm);
        sect.push_back(e);
    }
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].s, t = q.arrows[a].t;
        maps.push_back(proj[t] * N.map(static_cast<int>(a)) * sect[s]);
    }
    QuotModule out;
    out.rep = Representation(&N.algebra(), dims, std::move(maps), false);
    out.proj = ModuleMorphism{std::move(proj)};
    return out;
}

// ---------------------------------------------------------------------------
// Standard modules
// ---------------------------------------------------------------------------

inline Representation simple(const BoundQuiverAlgebra& alg, int v) {
    std::vector<int> d(alg.quiver().nv, 0);
    d[v] = 1;
    std::vector<Matrix> m;
    for (auto& a : alg.quiver().arrows) m.emplace_back(d[a.t], d[a.s], alg.field());
    return Representation(&alg, std::move(d), std::move(m), false);
}

/// Thin module supported on a vertex set: dimension 1 on each listed vertex,
/// every arrow between support vertices acting as 1.  Throws if that violates
/// a relation.
inline Representation thin_module(const BoundQuiverAlgebra& alg, const std::set<int>& support) {
    std::vector<int> d(alg.quiver().nv, 0);
    for (int v : support) {
        if (v < 0 || v >= alg.quiver().nv) throw std::invalid_argument("thin_module: bad vertex");
        d[v] = 1;
    }
    std::vector<Matrix> m;
    for (auto& a : alg.quiver().arrows) {
        Matrix x(d[a.t], d[a.s], alg.field());
        if (d[a.s] && d[a.t]) x.at(0, 0) = 1;
        m.push_back(std::move(x));
    }
    return Representation(&alg, std::move(d), std::move(m), true);
}

/// Indecomposable projective at a vertex: basis paths out of v, grouped by
/// their endpoint, arrows acting by left extension and reduction.
inline Representation projective(const BoundQuiverAlgebra& alg, int v) {
    const Quiver& q = alg.quiver();
    // For each vertex w, the basis indices of paths v -> w, in basis order.
    std::vector<std::vector<int>> slots(q.nv);
    std::vector<int> pos(alg.basis().size(), -1);
    for (size_t b = 0; b < alg.basis().size(); ++b) {
        int pid = alg.basis()[b];
        if (alg.path_source(pid) != v) continue;
        int w = alg.path_target(pid);
        pos[b] = static_cast<int>(slots[w].size());
        slots[w].push_back(static_cast<int>(b));
    }
    std::vector<int> dims(q.nv);
    for (int w = 0; w < q.nv; ++w) dims[w] = static_cast<int>(slots[w].size());
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].s, t = q.arrows[a].t;
        Matrix m(dims[t], dims[s], alg.field());
        for (int j = 0; j < dims[s]; ++j) {
            int pid = alg.basis()[slots[s][j]];
            int ext = alg.left_extend(pid, static_cast<int>(a));
            if (ext < 0) continue;
            for (auto& [bi, c] : alg.reduce_path(ext)) m.at(pos[bi], j) = c;
        }
        maps.push_back(std::move(m));
    }
    return Representation(&alg, std::move(dims), std::move(maps), false);
}

/// Direct sum with its canonical inclusions and projections.
struct DirectSum {
    Representation rep;
    std::vector<ModuleMorphism> incl, proj;
};

inline DirectSum direct_sum(const BoundQuiverAlgebra& alg,
                            const std::vector<const Representation*>& parts) {
    const Quiver& q = alg.quiver();
    const FieldSpec f = alg.field();
    std::vector<int> dims(q.nv, 0);
    std::vector<std::vector<int>> off(parts.size(), std::vector<int>(q.nv, 0));
    for (size_t k = 0; k < parts.size(); ++k)
        for (int v = 0; v < q.nv; ++v) {
            off[k][v] = dims[v];
            dims[v] += parts[k]->dim(v);
        }
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].s, t = q.arrows[a].t;
        Matrix m(dims[t], dims[s], f);
        for (size_t k = 0; k < parts.size(); ++k) {
            const Matrix& pa = parts[k]->map(static_cast<int>(a));
            for (int i = 0; i < pa.rows(); ++i)
                for (int j = 0; j < pa.cols(); ++j) m.at(off[k][t] + i, off[k][s] + j) = pa.at(i, j);
        }
        maps.push_back(std::move(m));
    }
    DirectSum out;
    out.rep = Representation(&alg, dims, std::move(maps), false);
    for (size_t k = 0; k < parts.size(); ++k) {
        ModuleMorphism in, pr;
        for (int v = 0; v < q.nv; ++v) {
            Matrix iv(dims[v], parts[k]->dim(v), f), pv(parts[k]->dim(v), dims[v], f);
            for (int j = 0; j < parts[k]->dim(v); ++j) {
                iv.at(off[k][v] + j, j) = 1;
                pv.at(j, off[k][v] + j) = 1;
            }
            in.comp.push_back(std::move(iv));
            pr.comp.push_back(std::move(pv));
        }
        out.incl.push_back(std::move(in));
        out.proj.push_back(std::move(pr));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Radical, top, covers, resolutions
// ---------------------------------------------------------------------------

/// Radical of a module: at each vertex, the sum of the images of incoming
/// arrows.
inline SubModule radical(const Representation& M) {
    const Quiver& q = M.algebra().quiver();
    std::vector<Matrix> spans;
    for (int v = 0; v < q.nv; ++v) {
        Matrix s(M.dim(v), 0, M.field());
        for (size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].t == v) s = Matrix::hstack(s, M.map(static_cast<int>(a)));
        spans.push_back(s.column_space_basis());
    }
    return submodule_from_spans(M, std::move(spans));
}

/// Projective cover: a surjection from a minimal projective, with the
/// multiplicity of each indecomposable projective summand.
struct Cover {
    Representation proj;
    ModuleMorphism onto;    // proj -> M
    std::vector<int> mult;  // multiplicity of P(v) per vertex
};

inline Cover projective_cover(const Representation& M) {
    const BoundQuiverAlgebra& alg = M.algebra();
    const Quiver& q = alg.quiver();
    const FieldSpec f = M.field();
    SubModule rad = radical(M);

    // Generators: lifts of a basis of M/rad at each vertex.
    std::vector<Matrix> gens;
    std::vector<int> mult(q.nv, 0);
    for (int v = 0; v < q.nv; ++v) {
        auto [qm, e] = quotient_by_subspace(rad.incl.comp[v]);
        gens.push_back(e);  // columns are generator lifts in M_v
        mult[v] = e.cols();
    }

    std::vector<Representation> pparts;
    std::vector<std::pair<int, int>> labels;  // (vertex, generator index)
    for (int v = 0; v < q.nv; ++v)
        for (int k = 0; k < mult[v]; ++k) {
            pparts.push_back(projective(alg, v));
            labels.emplace_back(v, k);
        }
    std::vector<const Representation*> pptr;
    for (auto& p : pparts) pptr.push_back(&p);
    DirectSum P = direct_sum(alg, pptr);

    // Map each summand P(v) -> M: basis path p (from v) |-> p . g.
    ModuleMorphism phi = zero_morphism(P.rep, M);
    for (size_t k = 0; k < pparts.size(); ++k) {
        auto [v, gi] = labels[k];
        Matrix g = gens[v].col(gi);
        // Same slot layout as projective():
        std::vector<std::vector<int>> slots(q.nv);
        for (size_t b = 0; b < alg.basis().size(); ++b) {
            int pid = alg.basis()[b];
            if (alg.path_source(pid) == v) slots[alg.path_target(pid)].push_back(pid);
        }
        ModuleMorphism psi = zero_morphism(pparts[k], M);
        for (int w = 0; w < q.nv; ++w)
            for (size_t j = 0; j < slots[w].size(); ++j) {
                Matrix img = M.path_action(alg.path(slots[w][j])) * g;
                for (int i = 0; i < M.dim(w); ++i)
                    psi.comp[w].at(i, static_cast<int>(j)) = img.at(i, 0);
            }
        phi = add(phi, compose(psi, P.proj[k]));
    }

    for (int v = 0; v < q.nv; ++v)
        if (phi.comp[v].rank() != M.dim(v)) throw std::logic_error("projective_cover: not surjective");
    if (!verify_morphism(P.rep, phi, M)) throw std::logic_error("projective_cover: not a morphism");

    return Cover{std::move(P.rep), std::move(phi), std::move(mult)};
}

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0.
struct ProjResolution {
    std::vector<Representation> P;
    std::vector<ModuleMorphism> d;  // d[i] : P[i+1] -> P[i]
    ModuleMorphism aug;             // P[0] -> M
};

inline ProjResolution projective_resolution(const Representation& M, int max_len = 32) {
    ProjResolution res;
    if (M.is_zero()) return res;
    Representation cur = M;
    ModuleMorphism incl_prev;  // cur -> P[i-1]
    for (int i = 0; i <= max_len; ++i) {
        Cover c = projective_cover(cur);
        if (i == 0) {
            res.aug = c.onto;
        } else {
            res.d.push_back(compose(incl_prev, c.onto));
        }
        SubModule syz = kernel(c.proj, c.onto);
        res.P.push_back(std::move(c.proj));
        if (syz.rep.is_zero()) return res;
        incl_prev = std::move(syz.incl);
        cur = std::move(syz.rep);
    }
    throw std::runtime_error("projective_resolution: length cap exceeded");
}

inline int projective_dimension(const Representation& M, int max_len = 32) {
    if (M.is_zero()) return -1;
    return static_cast<int>(projective_resolution(M, max_len).P.size()) - 1;
}

/// dim Ext^i(M, N), from Hom(P_., N) of a minimal resolution of M.
inline int ext_dim(const Representation& M, const Representation& N, int i) {
    if (i < 0 || M.is_zero() || N.is_zero()) return 0;
    ProjResolution res = projective_resolution(M);
    int len = static_cast<int>(res.P.size()) - 1;
    if (i > len) return 0;
    const FieldSpec fld = M.field();
    auto hb_i = hom_basis(res.P[i], N);
    // Matrix of f |-> f . d[k] in the chosen hom bases.
    auto delta = [&](int k, const std::vector<ModuleMorphism>& hb_k,
                     const std::vector<ModuleMorphism>& hb_k1) {
        Matrix m(static_cast<int>(hb_k1.size()), static_cast<int>(hb_k.size()), fld);
        for (size_t c = 0; c < hb_k.size(); ++c) {
            auto x = express_in_hom_basis(compose(hb_k[c], res.d[k]), hb_k1, fld);
            for (size_t r = 0; r < x.size(); ++r)
                m.at(static_cast<int>(r), static_cast<int>(c)) = x[r];
        }
        return m;
    };
    int dim_ker;
    if (i == len) {
        dim_ker = static_cast<int>(hb_i.size());
    } else {
        auto hb_next = hom_basis(res.P[i + 1], N);
        dim_ker = static_cast<int>(hb_i.size()) - delta(i, hb_i, hb_next).rank();
    }
    int rank_prev = 0;
    if (i > 0) {
        auto hb_prev = hom_basis(res.P[i - 1], N);
        rank_prev = delta(i - 1, hb_prev, hb_i).rank();
    }
    return dim_ker - rank_prev;
}

/// Trace of T in M: the submodule generated by all images of maps T -> M.
inline SubModule trace_submodule(const Representation& T, const Representation& M) {
    const Quiver& q = M.algebra().quiver();
    auto hb = hom_basis(T, M);
    std::vector<Matrix> spans;
    for (int v = 0; v < q.nv; ++v) {
        Matrix s(M.dim(v), 0, M.field());
        for (auto& h : hb) s = Matrix::hstack(s, h.comp[v]);
        spans.push_back(s.column_space_basis());
    }
    return submodule_from_spans(M, std::move(spans));
}

/// Isomorphism test: equal dimension vectors plus an invertible element of
/// Hom(M, N), searched among deterministic pseudo-random combinations of the
/// hom basis.
inline bool is_isomorphic(const Representation& M, const Representation& N) {
    if (M.dims() != N.dims()) return false;
    if (M.total_dim() == 0) return true;
    auto hb = hom_basis(M, N);
    if (hb.empty()) return false;
    auto invertible = [&](const ModuleMorphism& h) {
        for (size_t v = 0; v < h.comp.size(); ++v)
            if (h.comp[v].rank() != M.dim(static_cast<int>(v))) return false;
        return true;
    };
    for (auto& h : hb)
        if (invertible(h)) return true;
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<int>(state % 19) - 9;
    };
    for (int trial = 0; trial < 64; ++trial) {
        ModuleMorphism h = zero_morphism(M, N);
        for (auto& b : hb) h = add(h, scale(b, mpq_class(next())));
        if (invertible(h)) return true;
    }
    return false;
}

}  // namespace ttower
