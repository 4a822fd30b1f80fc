#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ttower/io.hpp"

using namespace ttower;
using namespace fixtures;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kFixtures = FIXTURE_DIR;

}  // namespace

TEST_CASE("the six-vertex fixture file builds the reference algebra") {
    BoundQuiverAlgebra alg = parse_algebra_file(slurp(kFixtures + "/r6.algebra"));
    BoundQuiverAlgebra ref = make_r6();
    CHECK(alg.quiver().nv == 6);
    CHECK(alg.quiver().arrows.size() == 5);
    CHECK(alg.dim() == ref.dim());
    for (int v = 0; v < 6; ++v) CHECK(projective(alg, v).dims() == projective(ref, v).dims());
}

TEST_CASE("empty relations give the hereditary path algebra") {
    BoundQuiverAlgebra alg = parse_algebra_file(slurp(kFixtures + "/a2.algebra"));
    CHECK(alg.dim() == 3);
    CHECK(alg.relations().empty());
}

TEST_CASE("parse errors carry their location") {
    std::string bad = "[field]\nQ\n[vertices]\n2\n[arrows]\na: 1 -> 2\n[relations]\nc*a\n";
    try {
        parse_algebra_file(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 8);
        CHECK(std::string(e.what()).find("unknown arrow 'c'") != std::string::npos);
        CHECK(std::string(e.what()).find("line 8") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra_file("[vertices]\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("stray line\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("[field]\nR\n[vertices]\n1\n"), ParseError);
}

TEST_CASE("module sugar builds simples, projectives and thin modules") {
    static BoundQuiverAlgebra alg = make_r6();
    CHECK(parse_module_file("[module]\nsimple 5\n", alg) == simple(alg, 4));
    CHECK(parse_module_file("[module]\nprojective 1\n", alg) == projective(alg, 0));
    Representation t = parse_module_file("[module]\nthin 4&6/5\n", alg);
    CHECK(t.dims() == std::vector<int>{0, 0, 0, 1, 1, 1});
    CHECK(t == thin1(alg, {4, 6, 5}));
    // Several lines make a direct sum; summand access matches.
    std::string t6 = slurp(kFixtures + "/t6.module");
    Representation T = parse_module_file(t6, alg);
    CHECK(T == make_t6(alg));
    auto parts = parse_module_summands(t6, alg);
    REQUIRE(parts.size() == 6);
    CHECK(parts[0] == thin1(alg, {4, 6, 5}));
}

TEST_CASE("explicit matrices are validated against the relations") {
    static BoundQuiverAlgebra alg = make_r6();
    // a2*a1 = 0 fails if both act as the identity on a module supported at 1,2,3.
    std::string bad = "[dims]\n1 1 1 0 0 0\n[map a1]\n1\n[map a2]\n1\n";
    CHECK_THROWS_AS(parse_module_file(bad, alg), ParseError);
    std::string good = "[dims]\n1 1 0 0 0 0\n[map a1]\n1\n";
    CHECK(parse_module_file(good, alg) == thin1(alg, {1, 2}));
    CHECK_THROWS_AS(parse_module_file("[dims]\n1 1\n", alg), ParseError);
    CHECK_THROWS_AS(parse_module_file("[dims]\n1 1 0 0 0 0\n[map a1]\n1 1\n", alg), ParseError);
}

TEST_CASE("modules round-trip through serialization") {
    static BoundQuiverAlgebra alg = make_r6();
    std::vector<Representation> mods = {simple(alg, 2), projective(alg, 0), thin1(alg, {4, 6, 5}),
                                        make_t6(alg)};
    for (auto& m : mods) CHECK(parse_module_file(serialize_module(m), alg) == m);
}

TEST_CASE("algebras round-trip through serialization") {
    BoundQuiverAlgebra a1 = make_r6();
    BoundQuiverAlgebra a2 = parse_algebra_file(serialize_algebra(a1));
    CHECK(a2.dim() == a1.dim());
    CHECK(a2.quiver().nv == a1.quiver().nv);
    REQUIRE(a2.quiver().arrows.size() == a1.quiver().arrows.size());
    for (size_t a = 0; a < a1.quiver().arrows.size(); ++a) {
        CHECK(a2.quiver().arrows[a].s == a1.quiver().arrows[a].s);
        CHECK(a2.quiver().arrows[a].t == a1.quiver().arrows[a].t);
        CHECK(a2.quiver().arrows[a].name == a1.quiver().arrows[a].name);
    }
    CHECK(a2.relations().size() == a1.relations().size());
}

TEST_CASE("object specs name modules, shifts and two-term chains") {
    static BoundQuiverAlgebra alg = make_r6();
    Complex s3 = parse_object_spec("simple3", alg);
    CHECK(s3.lo() == 0);
    CHECK(cohomology(s3, 0).dims() == simple(alg, 2).dims());
    Complex s3s = parse_object_spec("simple3[1]", alg);
    CHECK(s3s.normalized().lo() == -1);
    Complex p2 = parse_object_spec("projective2", alg);
    CHECK(cohomology(p2, 0).dims() == projective(alg, 1).dims());
    Complex t = parse_object_spec("thin:6/5[2]", alg);
    CHECK(cohomology(t, -2).dims() == thin1(alg, {6, 5}).dims());
    Complex c2 = parse_object_spec("chain(4&6/5;3/4)", alg);
    Complex ref = chain_of(alg, {thin1(alg, {4, 6, 5}), thin1(alg, {3, 4})});
    CHECK(c2.lo() == ref.lo());
    CHECK(cohomology(c2, -1).dims() == cohomology(ref, -1).dims());
    CHECK(cohomology(c2, 0).dims() == cohomology(ref, 0).dims());
    CHECK_THROWS_AS(parse_object_spec("mystery", alg), ParseError);
    CHECK_THROWS_AS(parse_object_spec("chain(1;3)", alg), ParseError);
}
