#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ttower/complex.hpp"

namespace ttower {

/// Parse failure with 1-based source location.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + what),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_, col_;
};

namespace detail_io {

struct Line {
    int number;  // 1-based
    std::string text;
};

/// Split into lines, dropping '#' comments and blank lines.
inline std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int num = 0;
    while (std::getline(in, raw)) {
        ++num;
        size_t h = raw.find('#');
        if (h != std::string::npos) raw.erase(h);
        size_t a = raw.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = raw.find_last_not_of(" \t\r");
        out.push_back({num, raw.substr(a, b - a + 1)});
    }
    return out;
}

/// Group lines under their [section] headers, preserving order and location.
inline std::vector<std::pair<std::string, std::vector<Line>>> sections(const std::string& text) {
    std::vector<std::pair<std::string, std::vector<Line>>> out;
    for (const Line& l : significant_lines(text)) {
        if (l.text.front() == '[') {
            if (l.text.back() != ']')
                throw ParseError(l.number, static_cast<int>(l.text.size()), "unterminated section header");
            out.emplace_back(l.text.substr(1, l.text.size() - 2), std::vector<Line>{});
        } else {
            if (out.empty()) throw ParseError(l.number, 1, "content before any [section] header");
            out.back().second.push_back(l);
        }
    }
    return out;
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline int parse_int(const Line& l, const std::string& tok, const std::string& what) {
    try {
        size_t pos;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(l.number, static_cast<int>(l.text.find(tok)) + 1,
                         "expected " + what + ", got '" + tok + "'");
    }
}

inline mpq_class parse_rational(const Line& l, const std::string& tok) {
    try {
        mpq_class q(tok);
        q.canonicalize();
        return q;
    } catch (...) {
        throw ParseError(l.number, static_cast<int>(l.text.find(tok)) + 1,
                         "expected a rational number, got '" + tok + "'");
    }
}

/// Arrow index by name, or a located error.
inline int arrow_by_name(const Quiver& q, const Line& l, const std::string& name) {
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].name == name) return static_cast<int>(a);
    throw ParseError(l.number, static_cast<int>(l.text.find(name)) + 1,
                     "unknown arrow '" + name + "'");
}

/// Path written in composition order: "a2*a1" applies a1 first.
inline PathRef parse_path(const Quiver& q, const Line& l, const std::string& word) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : word) {
        if (c == '*') {
            names.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    names.push_back(cur);
    PathRef p;
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
        int a = arrow_by_name(q, l, *it);
        if (p.arrows.empty())
            p.source = q.arrows[a].s;
        else if (q.arrows[a].s != q.arrows[p.arrows.back()].t)
            throw ParseError(l.number, static_cast<int>(l.text.find(*it)) + 1,
                             "path not composable at '" + *it + "'");
        p.arrows.push_back(a);
    }
    return p;
}

/// A relation line is a signed sum of terms, each an optional rational
/// coefficient followed by a path, e.g. "a2*a1 - 2 a3*a2".
inline Relation parse_relation(const Quiver& q, const Line& l) {
    Relation rel;
    mpq_class sign = 1;
    std::optional<mpq_class> coeff;
    for (const std::string& t : tokens(l.text)) {
        if (t == "+" || t == "-") {
            if (coeff) throw ParseError(l.number, 1, "dangling coefficient in relation");
            sign = (t == "-") ? -1 : 1;
        } else if ((t[0] >= '0' && t[0] <= '9') || (t.size() > 1 && (t[0] == '-' || t[0] == '+'))) {
            coeff = parse_rational(l, t);
        } else {
            mpq_class c = sign * (coeff ? *coeff : mpq_class(1));
            rel.emplace_back(c, parse_path(q, l, t));
            sign = 1;
            coeff.reset();
        }
    }
    if (coeff) throw ParseError(l.number, 1, "dangling coefficient in relation");
    if (rel.empty()) throw ParseError(l.number, 1, "empty relation");
    return rel;
}

}  // namespace detail_io

/// Declarative algebra format:
///   [field]      Q  |  F p
///   [vertices]   <count>            (vertices are labelled 1..count)
///   [arrows]     <name>: <s> -> <t>
///   [relations]  signed sums of *-separated arrow paths (optional section)
inline BoundQuiverAlgebra parse_algebra_file(const std::string& text) {
    using namespace detail_io;
    FieldSpec field = FieldSpec::rationals();
    Quiver q;
    std::vector<Relation> rels;
    bool saw_vertices = false;
    std::vector<std::pair<Line, std::string>> pending_relations;
    for (auto& [name, lines] : sections(text)) {
        if (name == "field") {
            for (const Line& l : lines) {
                auto t = tokens(l.text);
                if (t.size() == 1 && t[0] == "Q")
                    field = FieldSpec::rationals();
                else if (t.size() == 2 && t[0] == "F")
                    field = FieldSpec::prime(
                        static_cast<unsigned long>(parse_int(l, t[1], "a prime")));
                else
                    throw ParseError(l.number, 1, "field must be 'Q' or 'F p'");
            }
        } else if (name == "vertices") {
            for (const Line& l : lines) {
                q.nv = parse_int(l, tokens(l.text).at(0), "a vertex count");
                if (q.nv <= 0) throw ParseError(l.number, 1, "vertex count must be positive");
                saw_vertices = true;
            }
        } else if (name == "arrows") {
            for (const Line& l : lines) {
                auto t = tokens(l.text);
                if (t.size() != 4 || t[0].size() < 2 || t[0].back() != ':' || t[2] != "->")
                    throw ParseError(l.number, 1, "expected '<name>: <s> -> <t>'");
                std::string an = t[0].substr(0, t[0].size() - 1);
                int s = parse_int(l, t[1], "a vertex") - 1;
                int tt = parse_int(l, t[3], "a vertex") - 1;
                if (s < 0 || s >= q.nv || tt < 0 || tt >= q.nv)
                    throw ParseError(l.number, 1, "arrow endpoint out of range");
                for (auto& a : q.arrows)
                    if (a.name == an)
                        throw ParseError(l.number, 1, "duplicate arrow name '" + an + "'");
                q.add_arrow(s, tt, an);
            }
        } else if (name == "relations") {
            for (const Line& l : lines) rels.push_back(parse_relation(q, l));
        } else {
            throw ParseError(lines.empty() ? 1 : lines.front().number, 1,
                             "unknown section [" + name + "]");
        }
    }
    if (!saw_vertices) throw ParseError(1, 1, "missing [vertices] section");
    try {
        return BoundQuiverAlgebra(std::move(q), std::move(rels), field);
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, std::string("algebra rejected: ") + e.what());
    }
}

inline std::string serialize_algebra(const BoundQuiverAlgebra& alg) {
    std::ostringstream os;
    os << "[field]\n";
    if (alg.field().kind == FieldSpec::Kind::Rationals)
        os << "Q\n";
    else
        os << "F " << alg.field().p << "\n";
    os << "[vertices]\n" << alg.quiver().nv << "\n[arrows]\n";
    for (auto& a : alg.quiver().arrows) os << a.name << ": " << a.s + 1 << " -> " << a.t + 1 << "\n";
    os << "[relations]\n";
    for (auto& r : alg.relations()) {
        bool first = true;
        for (auto& [c, p] : r) {
            mpq_class a = c < 0 ? mpq_class(-c) : c;
            if (!first)
                os << (c < 0 ? " - " : " + ");
            else if (c < 0)
                os << "- ";
            if (a != 1) os << a << " ";
            for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
                os << alg.quiver().arrows[*it].name
                   << (std::next(it) == p.arrows.rend() ? "" : "*");
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

namespace detail_io {

/// Vertex labels in thin descriptors: 1-based integers separated by any of
/// '&', '/', ',' (so "4&6/5" reads as vertices {4, 6, 5}).
inline std::set<int> parse_thin_support(const BoundQuiverAlgebra& alg, const Line& l,
                                        const std::string& word) {
    std::set<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        int v = parse_int(l, cur, "a vertex label") - 1;
        if (v < 0 || v >= alg.quiver().nv)
            throw ParseError(l.number, static_cast<int>(l.text.find(cur)) + 1,
                             "vertex label out of range: " + cur);
        out.insert(v);
        cur.clear();
    };
    for (char c : word) {
        if (c == '&' || c == '/' || c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    if (out.empty()) throw ParseError(l.number, 1, "empty thin descriptor");
    return out;
}

/// One sugar line: "simple v", "projective v", or "thin <descriptor>".
inline Representation parse_summand(const BoundQuiverAlgebra& alg, const Line& l) {
    auto t = tokens(l.text);
    if (t.size() == 2 && t[0] == "simple") {
        int v = parse_int(l, t[1], "a vertex") - 1;
        if (v < 0 || v >= alg.quiver().nv) throw ParseError(l.number, 1, "vertex out of range");
        return simple(alg, v);
    }
    if (t.size() == 2 && (t[0] == "projective" || t[0] == "proj")) {
        int v = parse_int(l, t[1], "a vertex") - 1;
        if (v < 0 || v >= alg.quiver().nv) throw ParseError(l.number, 1, "vertex out of range");
        return projective(alg, v);
    }
    if (t.size() == 2 && t[0] == "thin")
        return thin_module(alg, parse_thin_support(alg, l, t[1]));
    throw ParseError(l.number, 1,
                     "expected 'simple v', 'projective v' or 'thin <vertices>', got '" + l.text +
                         "'");
}

}  // namespace detail_io

/// Module format, either sugar:
///   [module]
///   thin 4&6/5        # one line per direct summand
/// or explicit:
///   [dims]            # one dimension per vertex
///   [map <arrow>]     # matrix rows, target-dim x source-dim; omitted = zero
inline Representation parse_module_file(const std::string& text, const BoundQuiverAlgebra& alg) {
    using namespace detail_io;
    auto secs = sections(text);
    std::vector<Representation> summands;
    std::vector<int> dims;
    std::map<int, std::vector<std::vector<mpq_class>>> maps;
    bool explicit_form = false;
    for (auto& [name, lines] : secs) {
        if (name == "module") {
            for (const Line& l : lines) summands.push_back(parse_summand(alg, l));
        } else if (name == "dims") {
            explicit_form = true;
            for (const Line& l : lines)
                for (auto& t : tokens(l.text)) dims.push_back(parse_int(l, t, "a dimension"));
        } else if (name.rfind("map ", 0) == 0) {
            explicit_form = true;
            int a = arrow_by_name(alg.quiver(), lines.empty() ? Line{1, name} : lines.front(),
                                  name.substr(4));
            auto& rows = maps[a];
            for (const Line& l : lines) {
                std::vector<mpq_class> row;
                for (auto& t : tokens(l.text)) row.push_back(parse_rational(l, t));
                rows.push_back(std::move(row));
            }
        } else {
            throw ParseError(lines.empty() ? 1 : lines.front().number, 1,
                             "unknown section [" + name + "]");
        }
    }
    if (explicit_form && !summands.empty())
        throw ParseError(1, 1, "mix of [module] sugar and explicit [dims]/[map] sections");
    if (explicit_form) {
        const Quiver& q = alg.quiver();
        if (static_cast<int>(dims.size()) != q.nv)
            throw ParseError(1, 1, "[dims] must list exactly one dimension per vertex");
        std::vector<Matrix> ms;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            Matrix m(dims[q.arrows[a].t], dims[q.arrows[a].s], alg.field());
            auto it = maps.find(static_cast<int>(a));
            if (it != maps.end()) {
                if (static_cast<int>(it->second.size()) != m.rows())
                    throw ParseError(1, 1, "matrix for arrow '" + q.arrows[a].name +
                                               "' has wrong row count");
                for (int i = 0; i < m.rows(); ++i) {
                    if (static_cast<int>(it->second[i].size()) != m.cols())
                        throw ParseError(1, 1, "matrix for arrow '" + q.arrows[a].name +
                                                   "' has wrong column count");
                    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = it->second[i][j];
                }
            }
            ms.push_back(std::move(m));
        }
        try {
            return Representation(&alg, std::move(dims), std::move(ms), true);
        } catch (const std::invalid_argument& e) {
            throw ParseError(1, 1, std::string("module rejected: ") + e.what());
        }
    }
    if (summands.empty()) throw ParseError(1, 1, "no [module] content");
    std::vector<const Representation*> ptrs;
    for (auto& s : summands) ptrs.push_back(&s);
    return direct_sum(alg, ptrs).rep;
}

/// List of summands of a module file's [module] section (needed by tilting
/// verification, which works summand by summand); explicit-form files yield
/// a single "summand".
inline std::vector<Representation> parse_module_summands(const std::string& text,
                                                         const BoundQuiverAlgebra& alg) {
    using namespace detail_io;
    std::vector<Representation> out;
    bool sugar = false;
    for (auto& [name, lines] : sections(text)) {
        if (name == "module") {
            sugar = true;
            for (const Line& l : lines) out.push_back(parse_summand(alg, l));
        }
    }
    if (!sugar) out.push_back(parse_module_file(text, alg));
    return out;
}

/// Explicit serialization; parse_module_file(serialize_module(M)) == M.
inline std::string serialize_module(const Representation& M) {
    std::ostringstream os;
    os << "[dims]\n";
    for (size_t v = 0; v < M.dims().size(); ++v) os << (v ? " " : "") << M.dims()[v];
    os << "\n";
    const Quiver& q = M.algebra().quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Matrix& m = M.map(static_cast<int>(a));
        if (m.is_zero()) continue;
        os << "[map " << q.arrows[a].name << "]\n";
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
            os << "\n";
        }
    }
    return os.str();
}

/// Compact object descriptors for the command line:
///   simple3, projective2, thin:4&6/5       modules (1-based labels)
///   chain(4&6/5;3/4)                       complex of thin modules ending in
///                                          degree 0, with the unique nonzero
///                                          maps as differentials
///   any of the above followed by [k]       shift by k
inline Complex parse_object_spec(const std::string& specin, const BoundQuiverAlgebra& alg) {
    using namespace detail_io;
    std::string spec = specin;
    Line l{1, spec};
    int shift = 0;
    size_t br = spec.rfind('[');
    if (br != std::string::npos && spec.back() == ']') {
        shift = parse_int(l, spec.substr(br + 1, spec.size() - br - 2), "a shift");
        spec.erase(br);
    }
    auto module_of = [&](const std::string& s) -> Representation {
        if (s.rfind("simple", 0) == 0 && s.size() > 6)
            return parse_summand(alg, {1, "simple " + s.substr(6)});
        if (s.rfind("projective", 0) == 0 && s.size() > 10)
            return parse_summand(alg, {1, "projective " + s.substr(10)});
        if (s.rfind("thin:", 0) == 0) return parse_summand(alg, {1, "thin " + s.substr(5)});
        throw ParseError(1, 1, "unrecognized object spec '" + s + "'");
    };
    Complex c;
    if (spec.rfind("chain(", 0) == 0 && spec.back() == ')') {
        std::vector<Representation> mods;
        std::string inner = spec.substr(6, spec.size() - 7), cur;
        for (char ch : inner + ";") {
            if (ch == ';') {
                if (!cur.empty()) mods.push_back(thin_module(alg, parse_thin_support(alg, l, cur)));
                cur.clear();
            } else
                cur += ch;
        }
        if (mods.empty()) throw ParseError(1, 1, "empty chain descriptor");
        std::vector<ModuleMorphism> diffs;
        for (size_t k = 0; k + 1 < mods.size(); ++k) {
            auto hb = hom_basis(mods[k], mods[k + 1]);
            if (hb.size() != 1)
                throw ParseError(1, 1, "chain: hom space between consecutive terms is not 1-dimensional");
            diffs.push_back(hb[0]);
        }
        c = Complex(alg, 1 - static_cast<int>(mods.size()), mods, std::move(diffs));
    } else {
        c = Complex::from_module(alg, module_of(spec), 0);
    }
    return shift_complex(c, shift);
}

}  // namespace ttower
