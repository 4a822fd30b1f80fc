#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ttower/matrix.hpp"

using namespace ttower;

static Matrix M(std::initializer_list<std::initializer_list<int>> rows, FieldSpec f) {
    std::vector<std::vector<mpq_class>> v;
    for (auto& r : rows) {
        v.emplace_back();
        for (int x : r) v.back().emplace_back(x);
    }
    return Matrix::from_rows(v, f);
}

TEST_CASE("rref of a rank-1 matrix over Q") {
    auto f = FieldSpec::rationals();
    std::vector<int> piv;
    Matrix r = M({{1, 2}, {2, 4}}, f).rref(&piv);
    CHECK(r == M({{1, 2}, {0, 0}}, f));
    CHECK(piv == std::vector<int>{0});
}

TEST_CASE("kernel over F_2") {
    auto f = FieldSpec::prime(2);
    Matrix k = M({{1, 1}}, f).kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
}

TEST_CASE("solve over Q uses exact rationals") {
    auto f = FieldSpec::rationals();
    auto x = M({{2}}, f).solve(M({{1}}, f));
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == mpq_class(1, 2));
}

TEST_CASE("inconsistent system has no solution") {
    auto f = FieldSpec::rationals();
    CHECK_FALSE(M({{1, 2}, {2, 4}}, f).solve(M({{0}, {1}}, f)).has_value());
}

TEST_CASE("prime field arithmetic") {
    auto f = FieldSpec::prime(32003);
    CHECK(f.normalize(mpq_class(-1)) == mpq_class(32002));
    CHECK(f.mul(f.inv(mpq_class(7)), mpq_class(7)) == 1);
    CHECK(f.normalize(mpq_class(1, 2)) == f.inv(mpq_class(2)));
    CHECK_THROWS(FieldSpec::prime(32004));
}

TEST_CASE("rank-nullity and rref idempotence on pseudorandom matrices") {
    std::mt19937 rng(12345);
    for (auto f : {FieldSpec::rationals(), FieldSpec::prime(32003), FieldSpec::prime(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
            Matrix a(r, c, f);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    a.set(i, j, mpq_class(static_cast<int>(rng() % 7) - 3));
            Matrix R = a.rref();
            CHECK(R.rref() == R);
            Matrix K = a.kernel_basis();
            CHECK(a.rank() + K.cols() == c);
            CHECK((a * K).is_zero());
            CHECK(K.rank() == K.cols());
            // Canonical solve round-trips on a vector known to be in the image.
            Matrix x0(c, 1, f);
            for (int i = 0; i < c; ++i) x0.set(i, 0, mpq_class(static_cast<int>(rng() % 5) - 2));
            Matrix b = a * x0;
            auto x = a.solve(b);
            REQUIRE(x.has_value());
            CHECK(a * *x == b);
        }
    }
}

TEST_CASE("quotient by a subspace") {
    auto f = FieldSpec::rationals();
    // Subspace of Q^3 spanned by (1,1,0) and (0,2,2).
    Matrix S = M({{1, 0}, {1, 2}, {0, 2}}, f);
    auto [q, e] = quotient_by_subspace(S);
    REQUIRE(q.rows() == 1);
    CHECK((q * S).is_zero());
    CHECK(q * e == Matrix::identity(1, f));
    CHECK(q.rank() == 1);

    // Determinism: identical input gives identical maps.
    auto [q2, e2] = quotient_by_subspace(S);
    CHECK(q == q2);
    CHECK(e == e2);
}

TEST_CASE("matrix algebra identities") {
    std::mt19937 rng(777);
    auto f = FieldSpec::prime(32003);
    for (int trial = 0; trial < 10; ++trial) {
        auto rnd = [&](int r, int c) {
            Matrix m(r, c, f);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.set(i, j, mpq_class(static_cast<int>(rng() % 11) - 5));
            return m;
        };
        Matrix a = rnd(3, 4), b = rnd(4, 2), c = rnd(2, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(Matrix::identity(3, f) * a == a);
        CHECK(Matrix::hstack(a, a).cols() == 8);
        CHECK(Matrix::vstack(b, b).rows() == 8);
        CHECK(Matrix::block_diag({a, b}, f).rank() == a.rank() + b.rank());
    }
}
