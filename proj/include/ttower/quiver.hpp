#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttower/matrix.hpp"

namespace ttower {

/// Finite quiver.  Vertices are 0-based indices; arrows are stored in a fixed
/// order and referred to by index everywhere.
struct Quiver {
    struct Arrow {
        int s, t;  // source, target
        std::string name;
    };
    int nv = 0;
    std::vector<Arrow> arrows;

    int add_arrow(int s, int t, std::string name) {
        if (s < 0 || s >= nv || t < 0 || t >= nv)
            throw std::invalid_argument("Quiver: arrow endpoint out of range");
        arrows.push_back({s, t, std::move(name)});
        return static_cast<int>(arrows.size()) - 1;
    }
};

/// A path in a quiver: the trivial path at `source` when `arrows` is empty,
/// otherwise the composite applying arrows[0] first.
struct PathRef {
    int source = 0;
    std::vector<int> arrows;

    bool operator==(const PathRef&) const = default;
};

/// Linear combination of parallel paths; the generators of the defining ideal.
using Relation = std::vector<std::pair<mpq_class, PathRef>>;

/// Finite-dimensional quotient of a path algebra by an admissible ideal.
/// The basis consists of residue classes of paths, chosen to prefer short
/// paths: path enumeration runs length by length, products (path)*(relation)*
/// (path) are row-reduced with the longest paths as leading columns, and the
/// surviving non-pivot paths form the basis.  Enumeration stops at the first
/// length L where every path of length L reduces to shorter ones (or no such
/// path exists); left-multiplying that ideal data by arrows shows inductively
/// that all longer paths reduce too.
class BoundQuiverAlgebra {
  public:
    BoundQuiverAlgebra(Quiver q, std::vector<Relation> rels, FieldSpec f)
        : quiver_(std::move(q)), relations_(std::move(rels)), field_(f) {
        for (auto& r : relations_) validate_relation(r);
        build();
    }

    const Quiver& quiver() const { return quiver_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    int num_paths() const { return static_cast<int>(paths_.size()); }
    const PathRef& path(int id) const { return paths_[id]; }

    int path_source(int id) const { return paths_[id].source; }
    int path_target(int id) const {
        const PathRef& p = paths_[id];
        return p.arrows.empty() ? p.source : quiver_.arrows[p.arrows.back()].t;
    }

    /// Basis path ids, in enumeration order (short paths first).
    const std::vector<int>& basis() const { return basis_; }

    /// Index of a path id in the basis, or -1 if it is reducible.
    int basis_index(int path_id) const { return basis_pos_[path_id]; }

    /// Residue of a path as a sparse combination of basis indices.
    const std::vector<std::pair<int, mpq_class>>& reduce_path(int path_id) const {
        return residue_[path_id];
    }

    /// Path id of `a . p` (apply p, then arrow a), or -1 if not composable.
    int left_extend(int path_id, int arrow) const {
        auto it = extend_.find({path_id, arrow});
        return it == extend_.end() ? -1 : it->second;
    }

    int trivial_path_id(int v) const { return v; }

    int find_path(const PathRef& p) const {
        auto it = path_id_.find(key(p));
        return it == path_id_.end() ? -1 : it->second;
    }

    /// Residue of an arbitrary (possibly unenumerated) path, computed by
    /// applying its arrows one at a time and reducing after each step.
    std::vector<std::pair<int, mpq_class>> reduce_arbitrary(const PathRef& p) const {
        std::vector<mpq_class> coeff(basis_.size(), mpq_class(0));
        coeff[basis_pos_[trivial_path_id(p.source)]] = 1;
        for (int a : p.arrows) {
            std::vector<mpq_class> next(basis_.size(), mpq_class(0));
            for (size_t b = 0; b < basis_.size(); ++b) {
                if (coeff[b] == 0) continue;
                int q = left_extend(basis_[b], a);
                if (q < 0) continue;
                for (auto& [bi, c] : residue_[q])
                    next[bi] = field_.add(next[bi], field_.mul(coeff[b], c));
            }
            coeff = std::move(next);
        }
        std::vector<std::pair<int, mpq_class>> out;
        for (size_t b = 0; b < coeff.size(); ++b)
            if (coeff[b] != 0) out.emplace_back(static_cast<int>(b), coeff[b]);
        return out;
    }

  private:
    static std::vector<int> key(const PathRef& p) {
        std::vector<int> k{p.source};
        k.insert(k.end(), p.arrows.begin(), p.arrows.end());
        return k;
    }

    void validate_relation(const Relation& r) const {
        if (r.empty()) throw std::invalid_argument("empty relation");
        auto ends = [&](const PathRef& p) {
            int v = p.source;
            if (p.arrows.empty())
                throw std::invalid_argument("relation contains a trivial path (ideal not admissible)");
            for (int a : p.arrows) {
                if (a < 0 || a >= static_cast<int>(quiver_.arrows.size()))
                    throw std::invalid_argument("relation references unknown arrow");
                if (quiver_.arrows[a].s != v) throw std::invalid_argument("relation path not composable");
                v = quiver_.arrows[a].t;
            }
            return std::pair{p.source, v};
        };
        auto e0 = ends(r[0].second);
        for (auto& [c, p] : r)
            if (ends(p) != e0) throw std::invalid_argument("relation terms are not parallel paths");
    }

    void build() {
        constexpr int kMaxLen = 64;
        constexpr size_t kMaxPaths = 10000;

        auto add_path = [&](PathRef p) {
            int id = static_cast<int>(paths_.size());
            path_id_[key(p)] = id;
            paths_.push_back(std::move(p));
            return id;
        };
        std::vector<int> prev_layer;
        for (int v = 0; v < quiver_.nv; ++v) prev_layer.push_back(add_path({v, {}}));

        int max_rel_len = 1;
        for (auto& r : relations_)
            for (auto& [c, p] : r)
                max_rel_len = std::max(max_rel_len, static_cast<int>(p.arrows.size()));

        int L = 0;
        while (true) {
            ++L;
            if (L > kMaxLen) throw std::runtime_error("path length cap exceeded; algebra may be infinite-dimensional");
            std::vector<int> layer;
            for (int pid : prev_layer) {
                for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a) {
                    if (quiver_.arrows[a].s != path_target(pid)) continue;
                    PathRef np = paths_[pid];
                    np.arrows.push_back(a);
                    int nid = add_path(std::move(np));
                    extend_[{pid, a}] = nid;
                    layer.push_back(nid);
                }
            }
            if (paths_.size() > kMaxPaths)
                throw std::runtime_error("path count cap exceeded; algebra may be infinite-dimensional");

            if (layer.empty()) break;  // acyclic quiver ran out of paths
            if (L < max_rel_len) { prev_layer = std::move(layer); continue; }

            // Row-reduce all ideal products of length <= L; columns ordered
            // longest path first (ties by enumeration order), so pivots fall
            // on the longest paths and short paths survive as the basis.
            if (reduce_ideal(L) && all_pivots(layer)) break;
            prev_layer = std::move(layer);
        }
        // Final reduction data at the terminal length.
        reduce_ideal(L);
        finalize();
    }

    // Columns: all enumerated paths, sorted by (length desc, id asc).
    std::vector<int> column_order() const {
        std::vector<int> order(paths_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return paths_[a].arrows.size() > paths_[b].arrows.size();
        });
        return order;
    }

    bool reduce_ideal(int L) {
        std::vector<int> order = column_order();
        std::vector<int> col_of(paths_.size());
        for (size_t c = 0; c < order.size(); ++c) col_of[order[c]] = static_cast<int>(c);

        // Rows: q * r * p for enumerated paths p (ending at the relation's
        // source) and q (starting at its target), total length <= L.
        std::vector<std::vector<mpq_class>> rows;
        for (auto& rel : relations_) {
            int rs = rel[0].second.source;
            int rt = rel[0].second.arrows.empty()
                         ? rs
                         : quiver_.arrows[rel[0].second.arrows.back()].t;
            int rlen = 0;
            for (auto& [c, p] : rel) rlen = std::max(rlen, static_cast<int>(p.arrows.size()));
            for (int pre = 0; pre < num_paths(); ++pre) {
                if (path_target(pre) != rs) continue;
                for (int post = 0; post < num_paths(); ++post) {
                    if (path_source(post) != rt) continue;
                    int total = static_cast<int>(paths_[pre].arrows.size() + paths_[post].arrows.size()) + rlen;
                    if (total > L) continue;
                    std::vector<mpq_class> row(paths_.size(), mpq_class(0));
                    bool ok = true;
                    for (auto& [c, p] : rel) {
                        PathRef full = paths_[pre];
                        full.arrows.insert(full.arrows.end(), p.arrows.begin(), p.arrows.end());
                        full.arrows.insert(full.arrows.end(), paths_[post].arrows.begin(),
                                           paths_[post].arrows.end());
                        int id = find_path(full);
                        if (id < 0) { ok = false; break; }  // beyond enumeration horizon
                        row[col_of[id]] = field_.add(row[col_of[id]], c);
                    }
                    if (ok) rows.push_back(std::move(row));
                }
            }
        }
        Matrix m = Matrix::from_rows(rows, field_);
        if (rows.empty()) m = Matrix(0, static_cast<int>(paths_.size()), field_);
        std::vector<int> pivots;
        rref_ = m.rref(&pivots);
        rref_order_ = std::move(order);
        pivot_cols_.assign(paths_.size(), -1);
        for (size_t i = 0; i < pivots.size(); ++i) pivot_cols_[rref_order_[pivots[i]]] = static_cast<int>(i);
        return true;
    }

    bool all_pivots(const std::vector<int>& layer) const {
        for (int pid : layer)
            if (pivot_cols_[pid] < 0) return false;
        return true;
    }

    void finalize() {
        basis_.clear();
        basis_pos_.assign(paths_.size(), -1);
        for (int id = 0; id < num_paths(); ++id) {
            if (pivot_cols_[id] < 0) {
                basis_pos_[id] = static_cast<int>(basis_.size());
                basis_.push_back(id);
            }
        }
        // Residues: a basis path is itself; a pivot path expands via its rref
        // row, whose non-pivot entries all sit on basis paths.
        residue_.assign(paths_.size(), {});
        std::vector<int> path_of_col = rref_order_;
        for (int id = 0; id < num_paths(); ++id) {
            if (pivot_cols_[id] < 0) {
                residue_[id] = {{basis_pos_[id], mpq_class(1)}};
                continue;
            }
            int r = pivot_cols_[id];
            for (int c = 0; c < rref_.cols(); ++c) {
                int pid = path_of_col[c];
                if (pid == id || rref_.at(r, c) == 0) continue;
                if (basis_pos_[pid] < 0)
                    throw std::logic_error("rref row not fully reduced to basis paths");
                residue_[id].emplace_back(basis_pos_[pid], field_.neg(rref_.at(r, c)));
            }
            std::sort(residue_[id].begin(), residue_[id].end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
        }
    }

    Quiver quiver_;
    std::vector<Relation> relations_;
    FieldSpec field_;

    std::vector<PathRef> paths_;
    std::map<std::vector<int>, int> path_id_;
    std::map<std::pair<int, int>, int> extend_;

    Matrix rref_;
    std::vector<int> rref_order_;
    std::vector<int> pivot_cols_;

    std::vector<int> basis_;
    std::vector<int> basis_pos_;
    std::vector<std::vector<std::pair<int, mpq_class>>> residue_;
};

}  // namespace ttower
