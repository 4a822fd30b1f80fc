#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttower/complex.hpp"

namespace ttower {

/// add(T) membership: the identity of M factors through a finite sum of
/// copies of T iff it lies in the span of all composites M -> T -> M of
/// hom-basis elements.
inline bool in_add(const Representation& M, const Representation& T) {
    if (M.is_zero()) return true;
    const FieldSpec fld = M.field();
    auto U = hom_basis(M, T), V = hom_basis(T, M);
    if (U.empty() || V.empty()) return false;
    Matrix idc = morphism_coords(identity_morphism(M), fld);
    Matrix A(idc.rows(), static_cast<int>(U.size() * V.size()), fld);
    int c = 0;
    for (auto& u : U)
        for (auto& v : V) {
            Matrix col = morphism_coords(compose(v, u), fld);
            for (int i = 0; i < col.rows(); ++i) A.at(i, c) = col.at(i, 0);
            ++c;
        }
    return A.solve(idc).has_value();
}

/// Verification report for the classical tilting axioms:
///   (1) finite projective dimension n,
///   (2) Ext^i(T, T) = 0 for 1 <= i <= n,
///   (3) an exact coresolution 0 -> R -> T^0 -> ... -> T^r -> 0 of the
///       regular module with r <= n, built greedily from universal maps into
///       sums of copies of T.
struct TiltingReport {
    bool ok = false;
    int pd = -1;
    bool rigid = false;
    bool coresolved = false;
    int coresolution_length = -1;
    std::vector<std::string> failures;
};

/// Verify the tilting axioms for T = sum of the given summands.  The
/// coresolution is built from pruned left approximations into sums of
/// individual summands, which keeps the stages small.
inline TiltingReport verify_tilting(const BoundQuiverAlgebra& alg,
                                    const std::vector<Representation>& summands) {
    TiltingReport rep;
    std::vector<const Representation*> sptr;
    for (auto& s : summands) sptr.push_back(&s);
    Representation T = direct_sum(alg, sptr).rep;
    rep.pd = projective_dimension(T);
    int n = rep.pd;
    const FieldSpec fld = alg.field();

    rep.rigid = true;
    for (int i = 1; i <= n; ++i)
        if (ext_dim(T, T, i) != 0) {
            rep.rigid = false;
            rep.failures.push_back("Ext^" + std::to_string(i) + "(T,T) != 0");
        }

    // Regular module.
    std::vector<Representation> projs;
    for (int v = 0; v < alg.quiver().nv; ++v) projs.push_back(projective(alg, v));
    std::vector<const Representation*> pptr;
    for (auto& p : projs) pptr.push_back(&p);
    Representation X = direct_sum(alg, pptr).rep;

    rep.coresolved = false;
    for (int step = 0; step <= n; ++step) {
        if (in_add(X, T)) {
            rep.coresolved = true;
            rep.coresolution_length = step;
            break;
        }
        // Candidate maps X -> T_j, one hom basis per summand.
        struct Cand {
            size_t j;
            ModuleMorphism f;
        };
        std::vector<Cand> cand;
        std::vector<std::vector<ModuleMorphism>> homXT(summands.size());
        for (size_t j = 0; j < summands.size(); ++j) {
            homXT[j] = hom_basis(X, summands[j]);
            for (auto& f : homXT[j]) cand.push_back({j, f});
        }
        if (cand.empty()) {
            rep.failures.push_back("coresolution stalled: Hom(X, T) = 0 at step " +
                                   std::to_string(step));
            break;
        }
        std::vector<std::vector<std::vector<ModuleMorphism>>> homTT(summands.size());
        for (size_t j = 0; j < summands.size(); ++j) {
            homTT[j].resize(summands.size());
            for (size_t l = 0; l < summands.size(); ++l)
                homTT[j][l] = hom_basis(summands[j], summands[l]);
        }
        auto stacked_injective = [&](const std::vector<size_t>& keep) {
            for (int v = 0; v < alg.quiver().nv; ++v) {
                Matrix m(0, X.dim(v), fld);
                for (size_t k : keep) m = Matrix::vstack(m, cand[k].f.comp[v]);
                if (m.rank() != X.dim(v)) return false;
            }
            return true;
        };
        auto approximates = [&](const std::vector<size_t>& keep) {
            // For every summand T_l, span{ e . f : f kept into T_j,
            // e in Hom(T_j, T_l) } must contain Hom(X, T_l).
            for (size_t l = 0; l < summands.size(); ++l) {
                if (homXT[l].empty()) continue;
                std::vector<Matrix> cols;
                for (size_t k : keep)
                    for (auto& e : homTT[cand[k].j][l])
                        cols.push_back(morphism_coords(compose(e, cand[k].f), fld));
                Matrix A(morphism_coords(homXT[l][0], fld).rows(),
                         static_cast<int>(cols.size()), fld);
                for (size_t c = 0; c < cols.size(); ++c)
                    for (int i = 0; i < cols[c].rows(); ++i)
                        A.at(i, static_cast<int>(c)) = cols[c].at(i, 0);
                for (auto& f : homXT[l])
                    if (!A.solve(morphism_coords(f, fld)).has_value()) return false;
            }
            return true;
        };
        std::vector<size_t> keep(cand.size());
        for (size_t k = 0; k < cand.size(); ++k) keep[k] = k;
        if (!stacked_injective(keep)) {
            rep.failures.push_back("universal map into add(T) not injective at step " +
                                   std::to_string(step));
            break;
        }
        for (size_t k = 0; k < keep.size();) {
            std::vector<size_t> trial = keep;
            trial.erase(trial.begin() + static_cast<long>(k));
            if (!trial.empty() && stacked_injective(trial) && approximates(trial))
                keep = std::move(trial);
            else
                ++k;
        }
        ModuleMorphism u;
        for (int v = 0; v < alg.quiver().nv; ++v) {
            Matrix m(0, X.dim(v), fld);
            for (size_t k : keep) m = Matrix::vstack(m, cand[k].f.comp[v]);
            u.comp.push_back(std::move(m));
        }
        std::vector<const Representation*> copies;
        for (size_t k : keep) copies.push_back(&summands[cand[k].j]);
        Representation Th = direct_sum(alg, copies).rep;
        X = cokernel(u, Th).rep;
    }
    if (rep.coresolved == false && rep.failures.empty())
        rep.failures.push_back("no add(T)-coresolution of length <= pd(T)");

    rep.ok = rep.pd >= 0 && rep.rigid && rep.coresolved;
    return rep;
}

/// A fixed tilting module with its projective replacement, giving derived
/// homs out of T without re-resolving.
class TiltingPair {
  public:
    TiltingPair(const BoundQuiverAlgebra& alg, Representation T)
        : alg_(&alg), T_(std::move(T)), n_(projective_dimension(T_)) {
        PT_ = resolution_complex(alg, T_, 0);
    }

    const BoundQuiverAlgebra& algebra() const { return *alg_; }
    const Representation& module() const { return T_; }
    int n() const { return n_; }
    const ProjObject& replacement() const { return PT_; }

    /// Representatives of a basis of Hom_D(T, X[j]), as chain maps P_T -> X[j].
    std::vector<ChainMap> rhom_basis(const Complex& X, int j) const {
        return chain_maps_mod_homotopy(PT_.P, shift_complex(X, j));
    }

    int rhom_dim(const Complex& X, int j) const {
        return static_cast<int>(rhom_basis(X, j).size());
    }

    /// All degrees j with Hom_D(T, X[j]) != 0, with dimensions.  Outside
    /// [X.lo, X.hi + n] the hom spaces vanish for support reasons.
    std::map<int, int> static_profile(const Complex& Xin) const {
        Complex X = Xin.normalized();
        std::map<int, int> out;
        if (X.is_empty()) return out;
        for (int j = X.lo(); j <= X.hi() + n_; ++j) {
            int d = rhom_dim(X, j);
            if (d) out[j] = d;
        }
        return out;
    }

    /// X is T-static of degree e when its profile is concentrated in e.
    std::optional<int> ke_class(const Complex& X) const {
        auto p = static_profile(X);
        if (p.size() != 1) return std::nullopt;
        return p.begin()->first;
    }

  private:
    const BoundQuiverAlgebra* alg_;
    Representation T_;
    int n_;
    ProjObject PT_;
};

}  // namespace ttower
