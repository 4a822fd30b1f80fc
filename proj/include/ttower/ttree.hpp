#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ttower/hrs.hpp"

namespace ttower {

/// Node of a right t-tree.  `index` is the 0/1 word i_1...i_l addressing the
/// node, `degree` its digit sum, and `object` the actual object of D it
/// carries (an element of H_l[-degree]).  The two children, when present,
/// are the torsion and torsion-free parts of the node with respect to the
/// level-l torsion pair shifted by -degree:
///   0 -> child(0) -> node -> child(1) -> 0   in H_l[-degree],
/// realized by the triangle (incl, proj) stored on the node.
struct TTreeNode {
    std::string index;
    int level = 0;
    int degree = 0;
    Complex object;
    ChainMap incl;  // children[0].object -> object
    ChainMap proj;  // object -> children[1].object
    std::vector<TTreeNode> children;

    bool is_zero() const { return object.normalized().is_empty() || is_acyclic(object); }
};

struct TTree {
    TTreeNode root;
    int depth = 0;  // = n; leaves are the 2^n nodes at this depth

    const TTreeNode* find(const std::string& index) const {
        const TTreeNode* cur = &root;
        for (char c : index) {
            if ((c != '0' && c != '1') || cur->children.empty()) return nullptr;
            cur = &cur->children[c - '0'];
        }
        return cur;
    }

    void leaves(const TTreeNode& node, std::vector<const TTreeNode*>& out) const {
        if (node.children.empty()) {
            out.push_back(&node);
            return;
        }
        leaves(node.children[0], out);
        leaves(node.children[1], out);
    }
    std::vector<const TTreeNode*> leaves() const {
        std::vector<const TTreeNode*> out;
        leaves(root, out);
        return out;
    }
};

namespace detail_tree {

inline TTreeNode build_node(Tower& tw, std::string index, int level, int degree, Complex value) {
    TTreeNode node;
    node.index = std::move(index);
    node.level = level;
    node.degree = degree;
    node.object = std::move(value);
    if (level == tw.levels()) return node;
    if (node.is_zero()) {
        // Children of a zero object are zero; skip the computation.
        Complex z(tw.algebra());
        node.children.push_back(build_node(tw, node.index + "0", level + 1, degree, z));
        node.children.push_back(build_node(tw, node.index + "1", level + 1, degree + 1, z));
        return node;
    }
    Tower::Torsion td = tw.torsion_decompose(level, shift_complex(node.object, degree));
    node.incl = shift_chain_map(td.incl, -degree);
    node.proj = shift_chain_map(td.proj, -degree);
    Complex tors = shift_complex(td.tors, -degree);
    Complex free = shift_complex(td.free, -degree);
    if (!verify_chain_map(tors, node.incl, node.object) ||
        !verify_chain_map(node.object, node.proj, free))
        throw std::logic_error("ttree: node decomposition maps are not chain maps");
    node.children.push_back(build_node(tw, node.index + "0", level + 1, degree, std::move(tors)));
    node.children.push_back(
        build_node(tw, node.index + "1", level + 1, degree + 1, std::move(free)));
    return node;
}

}  // namespace detail_tree

inline TTree build_ttree(Tower& tw, const Complex& X) {
    if (!tw.in_heart(0, X)) throw std::invalid_argument("build_ttree: object not in the heart");
    TTree t;
    t.depth = tw.levels();
    t.root = detail_tree::build_node(tw, "", 0, 0, tw.resolve(X));
    return t;
}

inline TTree build_ttree(Tower& tw, const Representation& M) {
    return build_ttree(tw, tw.resolve(M));
}

/// Canonical per-object summary: the nonzero natural cohomologies with their
/// dimension vectors, e.g. "{-1:[0,0,0,0,0,1]}"; "0" for the zero object.
inline std::string object_summary(const Complex& Xin) {
    Complex X = Xin.normalized();
    if (X.is_empty()) return "0";
    std::ostringstream os;
    bool any = false;
    for (int k = X.lo(); k <= X.hi(); ++k) {
        Representation h = cohomology(X, k);
        if (h.is_zero()) continue;
        os << (any ? " " : "{") << k << ":[";
        const auto d = h.dims();
        for (size_t v = 0; v < d.size(); ++v) os << (v ? "," : "") << d[v];
        os << "]";
        any = true;
    }
    if (!any) return "0";
    os << "}";
    return os.str();
}

namespace detail_tree {

inline void serialize_node(const TTreeNode& node, std::ostream& os) {
    os << (node.index.empty() ? "e" : node.index) << " deg=" << node.degree << " "
       << object_summary(node.object) << "\n";
    for (auto& c : node.children) serialize_node(c, os);
}

}  // namespace detail_tree

/// Depth-first canonical text form, stable across runs; used for golden files.
inline std::string serialize_ttree(const TTree& t) {
    std::ostringstream os;
    detail_tree::serialize_node(t.root, os);
    return os.str();
}

/// Graphviz export: solid edges for the torsion inclusions, dashed for the
/// torsion-free projections.
inline std::string ttree_to_dot(const TTree& t, const std::string& name = "ttree") {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=TB;\n  node [shape=box];\n";
    std::vector<const TTreeNode*> stack = {&t.root};
    while (!stack.empty()) {
        const TTreeNode* n = stack.back();
        stack.pop_back();
        std::string id = "n" + (n->index.empty() ? std::string("e") : n->index);
        os << "  " << id << " [label=\"" << (n->index.empty() ? "e" : n->index) << " : "
           << object_summary(n->object) << "\"];\n";
        if (!n->children.empty()) {
            std::string c0 = "n" + n->children[0].index, c1 = "n" + n->children[1].index;
            os << "  " << c0 << " -> " << id << ";\n";
            os << "  " << id << " -> " << c1 << " [style=dashed];\n";
            stack.push_back(&n->children[1]);
            stack.push_back(&n->children[0]);
        }
    }
    os << "}\n";
    return os.str();
}

/// Support of j -> dim RHom(T, X[j])-ish profile, as the set of degrees with
/// nonzero tilted cohomology; empty for the zero object.
inline std::vector<int> rhom_support(Tower& tw, const Complex& Xin) {
    Complex X = Xin.normalized();
    std::vector<int> out;
    if (X.is_empty()) return out;
    for (int j = X.lo(); j <= X.hi() + tw.levels(); ++j)
        if (tw.rhom_dim(X, j) != 0) out.push_back(j);
    return out;
}

/// Degree d if the right t-tree of X degenerates to the single branch ending
/// in the leading leaf of degree d (equivalently X is T-static of degree d).
inline std::optional<int> is_static_single_branch(Tower& tw, const Complex& X) {
    TTree t = build_ttree(tw, X);
    std::vector<const TTreeNode*> nz;
    for (const TTreeNode* leaf : t.leaves())
        if (!leaf->is_zero()) nz.push_back(leaf);
    if (nz.size() != 1) return std::nullopt;
    const TTreeNode* leaf = nz[0];
    int d = leaf->degree;
    std::string leading(d, '1');
    leading.resize(t.depth, '0');
    if (leaf->index != leading) return std::nullopt;
    return d;
}
inline std::optional<int> is_static_single_branch(Tower& tw, const Representation& M) {
    return is_static_single_branch(tw, tw.resolve(M));
}

struct CohomologyIdentityReport {
    int vertices = 0;
    bool window_ok = true;       // rhom support inside [deg, n-l+deg]
    bool lowest_matches = true;  // H^deg = all-zeros descendant
    bool highest_matches = true; // H^{n-l+deg} = all-ones descendant
    bool ok() const { return window_ok && lowest_matches && highest_matches; }
};

/// Check, for every vertex X_w at depth l and degree d: the tilted cohomology
/// is supported in [d, n-l+d]; its lowest piece is the all-zeros descendant
/// leaf and its highest the all-ones descendant leaf (up to isomorphism).
inline CohomologyIdentityReport verify_cohomology_identities(Tower& tw, const TTree& t) {
    CohomologyIdentityReport rep;
    int n = t.depth;
    std::vector<const TTreeNode*> stack = {&t.root};
    while (!stack.empty()) {
        const TTreeNode* node = stack.back();
        stack.pop_back();
        ++rep.vertices;
        for (auto& c : node->children) stack.push_back(&c);
        int l = node->level, d = node->degree;
        for (int j : rhom_support(tw, node->object))
            if (j < d || j > n - l + d) rep.window_ok = false;
        const TTreeNode* zeros = node;
        const TTreeNode* ones = node;
        while (!zeros->children.empty()) zeros = &zeros->children[0];
        while (!ones->children.empty()) ones = &ones->children[1];
        if (node->is_zero()) continue;
        Complex low = tw.t_cohomology(n, node->object, d);
        Complex high = tw.t_cohomology(n, node->object, n - l + d);
        if (!derived_isomorphic(low, zeros->object)) rep.lowest_matches = false;
        if (!derived_isomorphic(high, ones->object)) rep.highest_matches = false;
    }
    return rep;
}

struct LeadingLeafReport {
    bool leaves_leading = true;        // nonzero leaves are leading and are modules
    bool cohomologies_static = true;   // each H^i_T(X) is concentrated in natural degree -i
    bool postnikov_ok = true;          // vertex 1...1 = tau_T^{>=i} X with the SES chain
    bool consistent() const { return leaves_leading == cohomologies_static; }
};

/// The two sides of the leading-leaf criterion, verified independently, plus
/// the Postnikov tower identities when the criterion holds.
inline LeadingLeafReport leading_leaf_analysis(Tower& tw, const Complex& X) {
    LeadingLeafReport rep;
    TTree t = build_ttree(tw, X);
    int n = t.depth;
    for (const TTreeNode* leaf : t.leaves()) {
        if (leaf->is_zero()) continue;
        std::string leading(leaf->degree, '1');
        leading.resize(n, '0');
        Complex nrm = leaf->object.normalized();
        bool is_module = nrm.lo() <= 0 && [&] {
            for (int k = nrm.lo(); k <= nrm.hi(); ++k)
                if (k != 0 && !cohomology(nrm, k).is_zero()) return false;
            return true;
        }();
        if (leaf->index != leading || !is_module) rep.leaves_leading = false;
    }
    Complex root = t.root.object;
    for (int i = 0; i <= n; ++i) {
        Complex h = tw.heart_cohomology(n, root, i).normalized();  // in H_n
        for (int k = h.lo(); k <= h.hi() && !h.is_empty(); ++k)
            if (k != -i && !cohomology(h, k).is_zero()) rep.cohomologies_static = false;
    }
    if (rep.leaves_leading && rep.cohomologies_static) {
        for (int i = 0; i <= n; ++i) {
            Complex tge = tw.truncate(n, root, i - 1).ge;  // tau_T^{>=i} X
            const TTreeNode* v = t.find(std::string(i, '1'));
            if (!v || !derived_isomorphic(tge, v->object)) rep.postnikov_ok = false;
            if (i < n) {
                // 0 -> H^i_T(X)[-i] -> tau^{>=i} X -> tau^{>=i+1} X -> 0
                Truncation s = tw.truncate(n, tge, i);
                if (!derived_isomorphic(s.le, tw.t_cohomology(n, root, i)) ||
                    !derived_isomorphic(s.ge, tw.truncate(n, root, i).ge))
                    rep.postnikov_ok = false;
            }
        }
    }
    return rep;
}
inline LeadingLeafReport leading_leaf_analysis(Tower& tw, const Representation& M) {
    return leading_leaf_analysis(tw, tw.resolve(M));
}

/// Subtree rooted at the given 0/1 index (the whole tree for "").
inline TTree subtree(const TTree& t, const std::string& index) {
    const TTreeNode* node = t.find(index);
    if (!node) throw std::invalid_argument("subtree: invalid index");
    return TTree{*node, t.depth};
}

}  // namespace ttower
