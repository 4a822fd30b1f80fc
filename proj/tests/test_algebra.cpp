#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace ttower;
using namespace fixtures;

TEST_CASE("r6 path basis") {
    auto alg = make_r6();
    // 6 trivial paths + 5 arrows survive; every length-2 path lies in the ideal.
    CHECK(alg.dim() == 11);
    for (int b : alg.basis())
        CHECK(alg.path(b).arrows.size() <= 1);
    // a2 a1 reduces to zero.
    CHECK(alg.reduce_arbitrary(PathRef{0, {0, 1}}).empty());
    // a1 alone does not.
    CHECK(alg.reduce_arbitrary(PathRef{0, {0}}).size() == 1);
}

TEST_CASE("a2 path basis") {
    auto alg = make_a2();
    CHECK(alg.dim() == 3);
}

TEST_CASE("commuting square algebra") {
    // 1 -> 2, 1 -> 3, 2 -> 4, 3 -> 4 with the square commuting.
    Quiver q;
    q.nv = 4;
    q.add_arrow(0, 1, "a");
    q.add_arrow(0, 2, "b");
    q.add_arrow(1, 3, "c");
    q.add_arrow(2, 3, "d");
    std::vector<Relation> rels = {
        {{mpq_class(1), PathRef{0, {0, 2}}}, {mpq_class(-1), PathRef{0, {1, 3}}}}};
    BoundQuiverAlgebra alg(std::move(q), std::move(rels), FieldSpec::rationals());
    // 4 trivial + 4 arrows + one diagonal path.
    CHECK(alg.dim() == 9);
    // The two length-2 paths agree in the quotient.
    auto ca = alg.reduce_arbitrary(PathRef{0, {0, 2}});
    auto db = alg.reduce_arbitrary(PathRef{0, {1, 3}});
    REQUIRE(ca.size() == 1);
    CHECK(ca == db);
}

TEST_CASE("linear A_n quivers without relations have dim n(n+1)/2") {
    for (int n = 1; n <= 5; ++n) {
        Quiver q;
        q.nv = n;
        for (int i = 0; i + 1 < n; ++i) q.add_arrow(i, i + 1, "a" + std::to_string(i));
        BoundQuiverAlgebra alg(std::move(q), {}, FieldSpec::prime(32003));
        CHECK(alg.dim() == n * (n + 1) / 2);
    }
}

TEST_CASE("loop without relations is rejected as infinite-dimensional") {
    Quiver q;
    q.nv = 1;
    q.add_arrow(0, 0, "x");
    CHECK_THROWS(BoundQuiverAlgebra(std::move(q), {}, FieldSpec::rationals()));
}

TEST_CASE("loop with nilpotency relation is finite") {
    Quiver q;
    q.nv = 1;
    q.add_arrow(0, 0, "x");
    std::vector<Relation> rels = {{{mpq_class(1), PathRef{0, {0, 0, 0}}}}};
    BoundQuiverAlgebra alg(std::move(q), std::move(rels), FieldSpec::rationals());
    CHECK(alg.dim() == 3);  // 1, x, x^2
}

TEST_CASE("relation validation") {
    Quiver q;
    q.nv = 2;
    q.add_arrow(0, 1, "a");
    // Non-composable relation path.
    std::vector<Relation> bad = {{{mpq_class(1), PathRef{1, {0}}}}};
    CHECK_THROWS(BoundQuiverAlgebra(std::move(q), std::move(bad), FieldSpec::rationals()));
}
