#include <doctest.h>

#include <random>

#include "zorbit/exact.hpp"
#include "zorbit/json_io.hpp"

using namespace zorbit;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Field f, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic and field checks") {
    Field f5 = Field::prime(5);
    Scalar a(3, f5), b(4, f5);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 2);
    CHECK((a / b * b) == a);
    CHECK(Scalar::convert(mpq_class(1, 2), f5).residue() == 3);
    CHECK_THROWS_AS(Scalar(1, f5) + Scalar(1, Field::rationals()), FieldMismatch);
    CHECK_THROWS_AS(Scalar(1, f5) + Scalar(1, Field::prime(7)), FieldMismatch);
    CHECK_THROWS(Field::prime(9));
    CHECK_THROWS(Scalar(0, f5).inverse());
    CHECK(Scalar(mpq_class(2, 3)).str() == "2/3");
}

TEST_CASE("rref examples") {
    Rref r = rref(Matrix::from_ints({{0, 2}, {1, 1}}));
    CHECK(r.rank == 2);
    CHECK(r.form == Matrix::identity(2));
    CHECK(rref(Matrix(3, 3)).rank == 0);
    Matrix m = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(m.rank() == 2);
    CHECK(nullspace(m).dim() == 1);
    Field f2 = Field::prime(2);
    CHECK(Matrix::from_ints({{1, 1}, {1, 1}}, f2).rank() == 1);
    CHECK(Matrix::from_ints({{1, 1}, {1, -1}}, f2).rank() == 1);
    CHECK(Matrix::from_ints({{1, 1}, {1, -1}}).rank() == 2);
}

TEST_CASE("rank nullity and nullspace property on random matrices") {
    std::mt19937_64 rng(7);
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(11)})
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix m = random_matrix(rng, r, c, f, 2);
            Rref red = rref(m);
            MatSpace k = nullspace(m);
            CHECK(red.rank + k.dim() == c);
            for (const auto& v : k.basis()) CHECK((m * v).is_zero());
            CHECK(rref(red.form).form == red.form);
        }
}

TEST_CASE("subspace intersection and sum") {
    std::mt19937_64 rng(11);
    for (Field f : {Field::rationals(), Field::prime(3)})
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Matrix> ga, gb;
            for (int i = 0; i < 3; ++i) ga.push_back(random_matrix(rng, 2, 2, f, 1));
            for (int i = 0; i < 2; ++i) gb.push_back(random_matrix(rng, 2, 2, f, 1));
            MatSpace A = MatSpace::span(2, 2, f, ga), B = MatSpace::span(2, 2, f, gb);
            MatSpace I = A.intersect(B), S = A.sum(B);
            CHECK(I.dim() + S.dim() == A.dim() + B.dim());
            CHECK(A.contains(I));
            CHECK(B.contains(I));
            CHECK(S.contains(A));
            CHECK(S.contains(B));
        }
    MatSpace a(2, 2), b(3, 3);
    CHECK_THROWS_AS(a.intersect(b), ShapeError);
    CHECK_THROWS_AS(a.intersect(MatSpace(2, 2, Field::prime(3))), FieldMismatch);
}

TEST_CASE("determinant and inverse") {
    Matrix m = Matrix::from_ints({{2, 1}, {1, 1}});
    CHECK(m.det() == Scalar(1, Field::rationals()));
    CHECK((m * m.inverse()).is_identity());
    CHECK_THROWS(Matrix::from_ints({{1, 2}, {2, 4}}).inverse());
}

TEST_CASE("json round trip and canonical rationals") {
    Matrix m(2, 2);
    m.set(0, 0, Scalar(mpq_class(-3, 4)));
    m.set(1, 1, 5);
    json j = to_json(m);
    CHECK(j.dump() == R"([["-3/4","0"],["0","5"]])");
    CHECK(matrix_from_json(j, Field::rationals()) == m);
    for (const char* bad : {"2/4", "3/1", "+3", "01", "-0", "1/0", "1/-2", "0/5", "", "1/"})
        CHECK_THROWS(parse_rational(bad));
    CHECK(parse_rational("-7/12") == mpq_class(-7, 12));
    Field f3 = Field::prime(3);
    Matrix g = Matrix::from_ints({{1, 2}, {0, 1}}, f3);
    CHECK(to_json(g).dump() == "[[1,2],[0,1]]");
    CHECK(matrix_from_json(to_json(g), f3) == g);
    CHECK_THROWS(matrix_from_json(json::parse("[[3,0],[0,1]]"), f3));
    CHECK_THROWS(matrix_from_json(json::parse("[[1,0],[0]]"), f3));
}
