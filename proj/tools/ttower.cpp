// Command-line front end: declarative algebra/module files in, deterministic
// text reports and DOT trees out.  Exit codes: 0 success, 1 verification
// failure, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ttower/compat.hpp"
#include "ttower/io.hpp"
#include "ttower/tilting.hpp"
#include "ttower/ttree.hpp"

using namespace ttower;

namespace {

int usage() {
    std::cerr <<
        "usage: ttower --algebra FILE [--tilting FILE] <command>\n"
        "commands:\n"
        "  algebra check                         parse and report the algebra\n"
        "  tilting verify                        check the tilting axioms\n"
        "  ttree <module> [--dot FILE]           right t-tree of a module\n"
        "  profile <object>                      derived-hom profile and staticity\n"
        "  hearts member <object> --level i      membership in the i-th heart\n"
        "  compat scan                           truncation-stability scan\n"
        "  compat witness                        search for a stability violation\n"
        "  corpus run                            batch property suite\n"
        "object specs: simpleN | projectiveN | thin:4&6/5 | chain(A;B;..) | spec[k]\n";
    return 2;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    std::string algebra_file, tilting_file, dot_file;
    std::optional<int> level;
    std::vector<std::string> args;  // positional: command words and specs
};

Options parse_options(int argc, char** argv) {
    Options o;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto value = [&](const char* flag) {
            if (++i >= argc) throw std::runtime_error(std::string(flag) + " needs a value");
            return std::string(argv[i]);
        };
        if (a == "--algebra" || a == "-A")
            o.algebra_file = value("--algebra");
        else if (a == "--tilting" || a == "-T")
            o.tilting_file = value("--tilting");
        else if (a == "--dot")
            o.dot_file = value("--dot");
        else if (a == "--level")
            o.level = std::stoi(value("--level"));
        else if (!a.empty() && a[0] == '-')
            throw std::runtime_error("unknown flag: " + a);
        else
            o.args.push_back(a);
    }
    return o;
}

void print_profile(Tower& tw, const Complex& X) {
    auto prof = tw.pair().static_profile(X);
    std::cout << "object: " << object_summary(X) << "\n";
    std::cout << "derived hom profile:";
    if (prof.empty()) std::cout << " (zero)";
    for (auto& [j, d] : prof) std::cout << " " << j << ":" << d;
    std::cout << "\n";
    auto ke = tw.pair().ke_class(X);
    if (ke)
        std::cout << "static: yes, degree " << *ke << "\n";
    else
        std::cout << "static: no\n";
}

int cmd_corpus(Tower& tw) {
    const BoundQuiverAlgebra& alg = tw.algebra();
    std::vector<std::pair<std::string, Representation>> mods;
    for (int v = 0; v < alg.quiver().nv; ++v) {
        mods.emplace_back("simple" + std::to_string(v + 1), simple(alg, v));
        mods.emplace_back("projective" + std::to_string(v + 1), projective(alg, v));
    }
    for (size_t s = 0; s < tw.summands().size(); ++s)
        mods.emplace_back("tilting-summand" + std::to_string(s + 1), tw.summands()[s]);
    int violations = 0;
    for (auto& [name, m] : mods) {
        TTree t = build_ttree(tw, m);
        std::vector<std::string> bad;
        CohomologyIdentityReport ci = verify_cohomology_identities(tw, t);
        if (!ci.ok()) bad.push_back("cohomology-identities");
        for (const TTreeNode* leaf : t.leaves()) {
            if (leaf->is_zero()) continue;
            if (rhom_support(tw, leaf->object) != std::vector<int>{leaf->degree}) {
                bad.push_back("leaf-staticity");
                break;
            }
        }
        // Euler additivity at every interior node.
        auto euler = [](const Complex& X) {
            int e = 0;
            Complex n = X.normalized();
            for (int k = n.lo(); k <= n.hi() && !n.is_empty(); ++k)
                e += (k % 2 ? -1 : 1) * cohomology(n, k).total_dim();
            return e;
        };
        std::vector<const TTreeNode*> stack = {&t.root};
        while (!stack.empty()) {
            const TTreeNode* node = stack.back();
            stack.pop_back();
            if (node->children.empty()) continue;
            if (euler(node->object) !=
                euler(node->children[0].object) + euler(node->children[1].object)) {
                bad.push_back("euler-additivity");
                break;
            }
            for (auto& c : node->children) stack.push_back(&c);
        }
        bool single = is_static_single_branch(tw, m).has_value();
        bool static_prof = tw.pair().ke_class(tw.resolve(m)).has_value();
        if (single != static_prof) bad.push_back("single-branch-vs-static");
        if (bad.empty()) {
            std::cout << name << ": ok\n";
        } else {
            ++violations;
            std::cout << name << ": FAIL";
            for (auto& b : bad) std::cout << " " << b;
            std::cout << "\n";
        }
    }
    std::cout << "corpus: " << mods.size() << " modules, " << violations << " violations\n";
    return violations == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
    Options o = parse_options(argc, argv);
    if (o.args.empty()) return usage();
    if (o.algebra_file.empty()) {
        std::cerr << "ttower: --algebra FILE is required\n";
        return 2;
    }
    BoundQuiverAlgebra alg = parse_algebra_file(slurp(o.algebra_file));

    const std::string& cmd = o.args[0];
    if (cmd == "algebra" && o.args.size() == 2 && o.args[1] == "check") {
        std::cout << "vertices: " << alg.quiver().nv << "\n";
        std::cout << "arrows: " << alg.quiver().arrows.size() << "\n";
        std::cout << "relations: " << alg.relations().size() << "\n";
        std::cout << "dimension: " << alg.dim() << "\n";
        for (int v = 0; v < alg.quiver().nv; ++v) {
            Representation p = projective(alg, v);
            std::cout << "projective " << v + 1 << ": dims";
            for (int d : p.dims()) std::cout << " " << d;
            std::cout << "\n";
        }
        return 0;
    }

    if (o.tilting_file.empty()) {
        std::cerr << "ttower: this command needs --tilting FILE\n";
        return 2;
    }
    std::vector<Representation> summands = parse_module_summands(slurp(o.tilting_file), alg);

    if (cmd == "tilting" && o.args.size() == 2 && o.args[1] == "verify") {
        TiltingReport rep = verify_tilting(alg, summands);
        std::cout << "projective dimension: " << rep.pd << "\n";
        std::cout << "rigid: " << (rep.rigid ? "yes" : "no") << "\n";
        std::cout << "coresolution: "
                  << (rep.coresolved ? "length " + std::to_string(rep.coresolution_length)
                                     : "not found")
                  << "\n";
        for (auto& f : rep.failures) std::cout << "failure: " << f << "\n";
        std::cout << rep.pd << "-tilting: " << (rep.ok ? "yes" : "no") << "\n";
        return rep.ok ? 0 : 1;
    }

    Tower tw(alg, summands);

    if (cmd == "ttree" && o.args.size() == 2) {
        Complex X = parse_object_spec(o.args[1], alg);
        TTree t = build_ttree(tw, X);
        std::cout << serialize_ttree(t);
        if (!o.dot_file.empty()) {
            std::ofstream out(o.dot_file);
            if (!out.good()) throw std::runtime_error("cannot write file: " + o.dot_file);
            out << ttree_to_dot(t);
        }
        return 0;
    }
    if (cmd == "profile" && o.args.size() == 2) {
        print_profile(tw, tw.resolve(parse_object_spec(o.args[1], alg)));
        return 0;
    }
    if (cmd == "hearts" && o.args.size() == 3 && o.args[1] == "member") {
        if (!o.level) {
            std::cerr << "ttower: hearts member needs --level i\n";
            return 2;
        }
        int i = *o.level;
        if (i < 0 || i > tw.levels()) {
            std::cerr << "ttower: level must be in [0, " << tw.levels() << "]\n";
            return 2;
        }
        Complex X = tw.resolve(parse_object_spec(o.args[2], alg));
        bool heart = tw.in_heart(i, X);
        std::cout << "level " << i << " aisle: " << (tw.in_aisle(i, X, 0) ? "yes" : "no") << "\n";
        std::cout << "level " << i << " co-aisle: " << (tw.in_coaisle(i, X, 0) ? "yes" : "no")
                  << "\n";
        std::cout << "heart member: " << (heart ? "yes" : "no") << "\n";
        if (heart && i < tw.levels()) {
            std::cout << "torsion class: " << (tw.in_torsion(i, X) ? "yes" : "no") << "\n";
            std::cout << "torsion-free class: " << (tw.in_torsion_free(X) ? "yes" : "no")
                      << "\n";
        }
        return heart ? 0 : 1;
    }
    if (cmd == "compat" && o.args.size() == 2 && o.args[1] == "scan") {
        std::vector<Complex> corpus = default_compat_corpus(tw);
        CompatReport l = left_compat_scan(tw, corpus);
        CompatReport r = right_compat_scan(tw, corpus);
        std::cout << "corpus size: " << corpus.size() << "\n";
        for (auto* rep : {&l, &r}) {
            std::cout << (rep->left ? "left" : "right") << " scan: " << rep->members
                      << " members, " << rep->violations.size() << " violations\n";
            for (auto& v : rep->violations)
                std::cout << "  violation at degree " << v.degree << ": "
                          << object_summary(v.object) << "\n";
        }
        return (l.clean() && r.clean()) ? 0 : 1;
    }
    if (cmd == "compat" && o.args.size() == 2 && o.args[1] == "witness") {
        auto w = find_incompat_witness(tw);
        if (!w) {
            std::cout << "witness: none found (corpus exhausted; not a compatibility proof)\n";
            return 1;
        }
        std::cout << "witness object: " << object_summary(w->object) << "\n";
        std::cout << "truncation degree: " << w->degree << "\n";
        Complex lower = tw.truncate(0, w->object, w->degree).le;
        std::cout << "truncated object: " << object_summary(lower) << "\n";
        std::cout << "replay: " << (replay_violation(tw, *w, true) ? "confirmed" : "FAILED")
                  << "\n";
        return replay_violation(tw, *w, true) ? 0 : 1;
    }
    if (cmd == "corpus" && o.args.size() == 2 && o.args[1] == "run") return cmd_corpus(tw);

    return usage();
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "ttower: parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ttower: error: " << e.what() << "\n";
        return 2;
    }
}
