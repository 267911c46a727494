#include <random>

#include "doctest.h"
#include "xprod/matrix.hpp"

using namespace xprod;

TEST_CASE("gf4 arithmetic") {
  Field f = Field::gf(2, 2);
  CHECK(f.order() == 4);
  // x^2 + x + 1 is the least irreducible: generator t satisfies t^2 = t + 1.
  Scalar t = Scalar::from_rep(f, 2);
  CHECK(t * t == Scalar::from_rep(f, 3));
  CHECK(t.pow(3).is_one());
  CHECK(t.inverse() * t == Scalar::one(f));
  CHECK(t.frobenius() == t * t);
  CHECK(t.inverse_frobenius(1).frobenius(1) == t);
}

TEST_CASE("rational arithmetic stays exact") {
  Field f = Field::rationals();
  Scalar half = Scalar::of(f, 1) / Scalar::of(f, 2);
  Scalar third = Scalar::of(f, 1) / Scalar::of(f, 3);
  CHECK((half + third).rational() == Rational(5, 6));
  CHECK((half * third).rational() == Rational(1, 6));
}

TEST_CASE("rref zero and identity") {
  Field f = Field::gf(3);
  Matrix z(f, 3, 3);
  auto rz = z.rref();
  CHECK(rz.m.is_zero());
  CHECK(rz.pivots.empty());
  Matrix id = Matrix::identity(f, 4);
  auto ri = id.rref();
  CHECK(ri.m == id);
  CHECK(ri.pivots == std::vector<size_t>{0, 1, 2, 3});
}

TEST_CASE("rref over gf2, hand-reduced oracle") {
  Field f = Field::gf(2);
  Matrix m = Matrix::from_rows(f, {{1, 1}, {1, 1}});
  auto r = m.rref();
  CHECK(r.m == Matrix::from_rows(f, {{1, 1}, {0, 0}}));
  CHECK(r.pivots == std::vector<size_t>{0});
  CHECK(r.m.rref().m == r.m);  // idempotent
}

TEST_CASE("nullspace basics") {
  Field f = Field::gf(2);
  CHECK(Matrix::identity(f, 3).nullspace_basis().cols() == 0);
  Matrix z(f, 3, 3);
  CHECK(z.nullspace_basis() == Matrix::identity(f, 3));
  // [[1,1]] over GF(2): kernel spanned by (1,1); oracle: enumerate GF(2)^2.
  Matrix m = Matrix::from_rows(f, {{1, 1}});
  Matrix nb = m.nullspace_basis();
  REQUIRE(nb.cols() == 1);
  CHECK(nb.col(0) == Vec{Scalar::one(f), Scalar::one(f)});
  size_t kernel_count = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Vec v{Scalar::of(f, a), Scalar::of(f, b)};
      if (vec_is_zero(m.apply(v))) ++kernel_count;
    }
  CHECK(kernel_count == 2);  // {0, (1,1)}
}

TEST_CASE("solve") {
  Field q = Field::rationals();
  Matrix two = Matrix::from_rows(q, {{2}});
  auto x = two.solve({Scalar::of(q, 1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0].rational() == Rational(1, 2));

  Matrix z(q, 2, 2);
  CHECK(!z.solve({Scalar::of(q, 1), Scalar::of(q, 0)}).has_value());

  Field f = Field::gf(5);
  Matrix id = Matrix::identity(f, 3);
  Vec v{Scalar::of(f, 1), Scalar::of(f, 4), Scalar::of(f, 2)};
  CHECK(*id.solve(v) == v);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (uint32_t p : {2u, 3u, 5u}) {
    Field f = Field::gf(p);
    for (int trial = 0; trial < 20; ++trial) {
      size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      Matrix m(f, rows, cols);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of(f, int64_t(rng() % p));
      CHECK(m.rank() + m.nullspace_basis().cols() == cols);
      // solve then multiply reproduces the rhs whenever solvable
      Vec rhs(rows, Scalar::zero(f));
      for (auto& s : rhs) s = Scalar::of(f, int64_t(rng() % p));
      if (auto x = m.solve(rhs)) CHECK(m.apply(*x) == rhs);
      // nullspace columns really are in the kernel
      Matrix nb = m.nullspace_basis();
      for (size_t c = 0; c < nb.cols(); ++c) CHECK(vec_is_zero(m.apply(nb.col(c))));
    }
  }
}

TEST_CASE("column space canonical form") {
  Field f = Field::gf(3);
  Matrix a = Matrix::from_rows(f, {{1, 2}, {2, 1}, {0, 1}});
  Matrix doubled = Matrix::hstack(a, a);
  CHECK(column_space(a) == column_space(doubled));
  CHECK(column_space(a).cols() == 2);
}

TEST_CASE("inverse round trip") {
  Field f = Field::gf(7);
  Matrix m = Matrix::from_rows(f, {{1, 2, 0}, {0, 1, 5}, {3, 0, 1}});
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK((*inv * m).is_identity());
  CHECK((m * *inv).is_identity());
  Matrix sing = Matrix::from_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
  CHECK(!sing.inverse().has_value());
}
