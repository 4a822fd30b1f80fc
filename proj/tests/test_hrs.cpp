#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "ttower/hrs.hpp"

using namespace ttower;
using namespace fixtures;

namespace {

// One shared tower so the truncation/torsion caches survive across test cases.
BoundQuiverAlgebra& r6() {
    static BoundQuiverAlgebra alg = make_r6();
    return alg;
}
Tower& tw() {
    static Tower t(r6(), t6_summands(r6()));
    return t;
}

// The twelve indecomposable modules plus the four indecomposable interval
// complexes of the workbench algebra, as minimal projective complexes.
Complex obj(const std::string& name) {
    static std::map<std::string, Complex> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    auto& alg = r6();
    Complex c;
    if (name == "C1")
        c = tw().resolve(chain_of(alg, {thin1(alg, {4, 5}), thin1(alg, {3, 4})}));
    else if (name == "C2")
        c = tw().resolve(chain_of(alg, {thin1(alg, {4, 6, 5}), thin1(alg, {3, 4})}));
    else if (name == "C3")
        c = tw().resolve(
            chain_of(alg, {thin1(alg, {4, 6, 5}), thin1(alg, {3, 4}), thin1(alg, {2, 3})}));
    else if (name == "C4")
        c = tw().resolve(chain_of(alg, {thin1(alg, {4, 6, 5}), thin1(alg, {3, 4}),
                                        thin1(alg, {2, 3}), thin1(alg, {1, 2})}));
    else {
        std::set<int> verts;
        for (char ch : name)
            if (ch >= '1' && ch <= '6') verts.insert(ch - '1');
        c = tw().resolve(thin_module(alg, verts));
    }
    cache.emplace(name, c);
    return c;
}

Complex obj(const std::string& name, int shift) { return shift_complex(obj(name), shift); }

}  // namespace

TEST_CASE("level-0 truncation matches natural cohomology") {
    Complex X = obj("C3");  // cohomology in degrees -2 (6/5) and 0 (2)
    for (int k = -3; k <= 1; ++k) {
        Truncation t = tw().truncate(0, X, k);
        CHECK(verify_chain_map(t.le, t.u, X));
        CHECK(verify_chain_map(X, t.v, t.ge));
        for (int m = -3; m <= 1; ++m) {
            CHECK(cohomology(t.le, m).dims() ==
                  (m <= k ? cohomology(X, m).dims() : std::vector<int>(6, 0)));
            CHECK(cohomology(t.ge, m).dims() ==
                  (m > k ? cohomology(X, m).dims() : std::vector<int>(6, 0)));
        }
    }
}

TEST_CASE("torsion pairs of the three lower hearts") {
    // Level 0: the torsion-free class is {5, 4/5, 6/5}, everything else in
    // the module category is torsion.
    std::vector<std::string> mods = {"1", "2", "3", "4", "5", "6", "12", "23", "34",
                                     "45", "65", "465"};
    std::vector<std::string> y0 = {"5", "45", "65"};
    for (auto& m : mods) {
        bool free_exp = std::find(y0.begin(), y0.end(), m) != y0.end();
        CAPTURE(m);
        CHECK(tw().in_torsion_free(obj(m)) == free_exp);
        CHECK(tw().in_torsion(0, obj(m)) == !free_exp);
    }

    // Level 1: Y_1 = {6/5[1]}.
    CHECK(tw().in_torsion_free(obj("65", 1)));
    CHECK(tw().in_torsion(1, obj("465")));
    CHECK(tw().in_torsion(1, obj("45", 1)));
    CHECK(tw().in_torsion(1, obj("C1")));
    CHECK(tw().in_torsion(1, obj("C2")));
    CHECK_FALSE(tw().in_torsion(1, obj("4")));  // mixed: 4&6/5 under 6/5[1]

    // Level 2: Y_2 = {6/5[2]}.
    CHECK(tw().in_torsion_free(obj("65", 2)));
    CHECK(tw().in_torsion(2, obj("C3")));
    CHECK_FALSE(tw().in_torsion(2, obj("3")));  // mixed: C2 under 6/5[2]
}

TEST_CASE("heart membership tables across the tower") {
    // Expected members of each heart H_i, as name@shift.  Everything else in
    // the universe below must be rejected.
    using Obj = std::pair<std::string, int>;
    std::vector<std::string> names = {"1",  "2",  "3",  "4",  "5",  "6",  "12", "23",
                                      "34", "45", "65", "465", "C1", "C2", "C3", "C4"};
    std::map<int, std::set<Obj>> heart;
    for (auto& n : names)
        if (n[0] != 'C') heart[0].insert({n, 0});
    heart[1] = {{"1", 0},  {"2", 0},  {"3", 0},  {"4", 0},   {"6", 0},  {"12", 0}, {"23", 0},
                {"34", 0}, {"465", 0}, {"C1", 0}, {"C2", 0},  {"5", 1},  {"45", 1}, {"65", 1}};
    heart[2] = {{"1", 0},  {"2", 0},  {"3", 0},  {"6", 0},   {"12", 0}, {"23", 0}, {"34", 0},
                {"465", 0}, {"C1", 0}, {"C2", 0}, {"C3", 0},  {"45", 1}, {"65", 2}};
    heart[3] = {{"1", 0},  {"2", 0},  {"6", 0},  {"12", 0},  {"23", 0}, {"34", 0}, {"465", 0},
                {"C1", 0}, {"C2", 0}, {"C3", 0}, {"C4", 0},  {"45", 1}, {"65", 3}};
    for (int lvl = 0; lvl <= 3; ++lvl)
        for (auto& n : names)
            for (int s = 0; s <= 3; ++s) {
                bool expect = heart[lvl].count({n, s}) > 0;
                CAPTURE(lvl, n, s);
                CHECK(tw().in_heart(lvl, obj(n, s)) == expect);
            }
}

TEST_CASE("torsion and torsion-free classes of each heart") {
    using Obj = std::pair<std::string, int>;
    // Torsion class X_i and torsion-free class Y_i inside H_i; heart members
    // in neither are proper extensions of one by the other.
    std::map<int, std::set<Obj>> tors, free;
    tors[0] = {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}, {"6", 0},
               {"12", 0}, {"23", 0}, {"34", 0}, {"465", 0}};
    free[0] = {{"5", 0}, {"45", 0}, {"65", 0}};
    tors[1] = {{"1", 0}, {"2", 0}, {"3", 0}, {"6", 0}, {"12", 0}, {"23", 0},
               {"34", 0}, {"465", 0}, {"C1", 0}, {"C2", 0}, {"45", 1}};
    free[1] = {{"65", 1}};
    tors[2] = {{"1", 0}, {"2", 0}, {"6", 0}, {"12", 0}, {"23", 0}, {"34", 0},
               {"465", 0}, {"C1", 0}, {"C2", 0}, {"C3", 0}, {"45", 1}};
    free[2] = {{"65", 2}};
    std::map<int, std::set<Obj>> heart;
    heart[0] = tors[0];
    heart[0].insert(free[0].begin(), free[0].end());
    heart[1] = tors[1];
    heart[1].insert(free[1].begin(), free[1].end());
    heart[1].insert({"4", 0});
    heart[1].insert({"5", 1});
    heart[2] = tors[2];
    heart[2].insert(free[2].begin(), free[2].end());
    heart[2].insert({"3", 0});
    for (int lvl = 0; lvl <= 2; ++lvl)
        for (auto& [n, s] : heart[lvl]) {
            CAPTURE(lvl, n, s);
            Complex x = obj(n, s);
            CHECK(tw().in_torsion(lvl, x) == (tors[lvl].count({n, s}) > 0));
            CHECK(tw().in_torsion_free(x) == (free[lvl].count({n, s}) > 0));
        }
}

TEST_CASE("torsion decomposition of 4 in the first heart") {
    Tower::Torsion td = tw().torsion_decompose(1, obj("4"));
    CHECK(verify_chain_map(td.tors, td.incl, obj("4")));
    CHECK(verify_chain_map(obj("4"), td.proj, td.free));
    CHECK(derived_isomorphic(td.tors, obj("465")));
    CHECK(derived_isomorphic(td.free, obj("65", 1)));
    // The quotient map realizes free as the cone of the inclusion.
    ConeResult c = cone(td.incl, td.tors, obj("4"));
    CHECK(derived_isomorphic(c.C, td.free));
}

TEST_CASE("torsion decomposition of 3 in the second heart") {
    Tower::Torsion td = tw().torsion_decompose(2, obj("3"));
    CHECK(derived_isomorphic(td.tors, obj("C2")));
    CHECK(derived_isomorphic(td.free, obj("65", 2)));
}

TEST_CASE("level-1 truncations of the simple 5") {
    // 5 lies in the torsion-free class of level 0, so it sits entirely in
    // D_1^{>=1}: its lower level-1 truncation vanishes.
    Complex five = obj("5");
    CHECK(tw().in_coaisle(1, five, 1));
    Truncation t = tw().truncate(1, five, 0);
    CHECK(t.le.normalized().is_empty());
    CHECK(derived_isomorphic(t.ge, five));

    // 4 lies in H_1; its level-2 truncation splits it along the torsion pair
    // of H_1 into lower part 4&6/5 and upper part 6/5[1].
    Truncation t4 = tw().truncate(2, obj("4"), 0);
    CHECK(derived_isomorphic(t4.le, obj("465")));
    CHECK(derived_isomorphic(t4.ge, obj("65", 1)));
}
