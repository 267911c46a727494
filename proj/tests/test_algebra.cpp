#include "doctest.h"
#include "fixtures.hpp"
#include "xprod/errors.hpp"
#include "xprod/split.hpp"

using namespace xprod;
using namespace xfix;

TEST_CASE("construction validates") {
  Field f = Field::gf(3);
  auto k = field_algebra(f);
  CHECK(k->dim() == 1);
  auto d = dual_numbers(f);
  AlgebraElement x = algebra_element(d, unit_vec(f, 2, 1));
  CHECK((x * x).is_zero());
  CHECK((x * algebra_one(d)) == x);

  // Corrupting c[0][0][0] breaks associativity or the unit law; scan catches it.
  std::vector<FDAlgebra::Quad> bad = {
      {0, 0, 0, Scalar::of(f, 2)},
      {0, 1, 1, Scalar::one(f)},
      {1, 0, 1, Scalar::one(f)},
  };
  CHECK_THROWS_AS(FDAlgebra::from_structure_constants(f, 2, bad, unit_vec(f, 2, 0)), Error);

  // A genuinely non-associative table with intact unit: b1*b1 = b1 but
  // (b1 b1) b1 != b1 (b1 b1) needs dim 3.
  std::vector<FDAlgebra::Quad> nonassoc = {
      {0, 0, 0, Scalar::one(f)}, {0, 1, 1, Scalar::one(f)}, {1, 0, 1, Scalar::one(f)},
      {0, 2, 2, Scalar::one(f)}, {2, 0, 2, Scalar::one(f)}, {1, 1, 2, Scalar::one(f)},
      {1, 2, 0, Scalar::one(f)},  // x * x^2 = 1 while x^2 * x = 0: breaks associativity
  };
  CHECK_THROWS_AS(FDAlgebra::from_structure_constants(f, 3, nonassoc, unit_vec(f, 3, 0)),
                  NotAssociative);
}

TEST_CASE("try_inverse") {
  Field f2 = Field::gf(2);
  auto d = dual_numbers(f2);
  AlgebraElement one = algebra_one(d);
  AlgebraElement x = algebra_element(d, unit_vec(f2, 2, 1));
  CHECK(one.try_inverse()->coords == one.coords);
  CHECK(!x.try_inverse().has_value());
  // 1 + x squares to 1 in characteristic 2.
  AlgebraElement u = one + x;
  auto ui = u.try_inverse();
  REQUIRE(ui.has_value());
  CHECK(*ui == u);
}

TEST_CASE("center") {
  Field f = Field::gf(3);
  auto d = dual_numbers(f);
  CHECK(center(*d).dim() == 2);  // commutative: everything

  auto m2 = matrix2(f);
  Subspace c = center(*m2);
  CHECK(c.dim() == 1);
  CHECK(c.contains(m2->one()));

  PathAlgebra pa = example45_algebra();
  Subspace c45 = center(*pa.alg);
  CHECK(c45.dim() == 1);
  CHECK(c45.contains(pa.alg->one()));  // spanned by 1 = e_x + e_y
}

TEST_CASE("radical with certificate") {
  Field f3 = Field::gf(3);
  CHECK(radical(*product_of_two_fields(f3)).dim() == 0);
  CHECK(radical(*matrix2(f3)).dim() == 0);

  auto d = dual_numbers(f3);
  Subspace r = radical(*d);
  REQUIRE(r.dim() == 1);
  CHECK(r.contains(unit_vec(f3, 2, 1)));

  // Example 4.5 algebra: radical spanned by the two arrows.
  PathAlgebra pa = example45_algebra();
  Subspace r45 = radical(*pa.alg);
  CHECK(r45.dim() == 2);
  CHECK(r45 == pa.arrow_radical);

  // Group algebra of C2 in characteristic 2 is local: radical = aug ideal.
  Field f2 = Field::gf(2);
  std::vector<FDAlgebra::Quad> q = {
      {0, 0, 0, Scalar::one(f2)}, {0, 1, 1, Scalar::one(f2)},
      {1, 0, 1, Scalar::one(f2)}, {1, 1, 0, Scalar::one(f2)}};
  auto kc2 = FDAlgebra::from_structure_constants(f2, 2, q, unit_vec(f2, 2, 0));
  Subspace rk = radical(*kc2);
  CHECK(rk.dim() == 1);
  Vec g1 = unit_vec(f2, 2, 0);
  g1[1] = Scalar::one(f2);
  CHECK(rk.contains(g1));  // 1 + g

  // Rationals: trace form route.
  auto dq = dual_numbers(Field::rationals());
  CHECK(radical(*dq).dim() == 1);

  auto [rr, cert] = radical_with_certificate(*pa.alg);
  CHECK(cert.ok());
  CHECK(cert.nilpotency_index == 2);
}

TEST_CASE("quotient algebra") {
  Field f = Field::gf(3);
  auto d = dual_numbers(f);
  QuotientAlgebra q = quotient_algebra(*d, radical(*d));
  CHECK(q.alg->dim() == 1);

  PathAlgebra pa = example45_algebra();
  QuotientAlgebra q45 = quotient_algebra(*pa.alg, radical(*pa.alg));
  CHECK(q45.alg->dim() == 2);
  CHECK(radical(*q45.alg).dim() == 0);
  CHECK(q45.alg->is_commutative());
  // GF(2) x GF(2) profile
  AlgebraProfile prof = characterize_local_commutative(q45.alg);
  CHECK(prof.dim == 2);
  CHECK(prof.commutative);
  CHECK(!prof.local);
  CHECK(prof.loewy == std::vector<size_t>{2});

  // Quotient by zero ideal gives the same structure constants.
  QuotientAlgebra qz = quotient_algebra(*d, Subspace::zero(f, 2));
  CHECK(qz.alg->dim() == 2);
  CHECK(qz.alg->quads().size() == d->quads().size());

  // Not an ideal: span{1} inside dual numbers.
  Subspace notideal = Subspace::from_spanning(Matrix::from_cols(f, 2, {unit_vec(f, 2, 0)}));
  CHECK_THROWS_AS(quotient_algebra(*d, notideal), NotAnIdeal);
}

TEST_CASE("corner algebra") {
  Field f = Field::gf(2);
  PathAlgebra pa = example45_algebra();
  // e = 1 gives A back.
  CornerAlgebra whole = corner_algebra(pa.alg, algebra_one(pa.alg));
  CHECK(whole.alg->dim() == 4);
  // corner at e_x of the path algebra 1->2 is the ground field.
  PathAlgebra a2 = a2_algebra(f);
  CornerAlgebra c = corner_algebra(a2.alg, a2.vertex_idempotents.elems[0]);
  CHECK(c.alg->dim() == 1);
  CHECK_THROWS_AS(corner_algebra(pa.alg, algebra_element(pa.alg, unit_vec(f, 4, 2))),
                  NotIdempotent);
}

TEST_CASE("validate idempotent set") {
  PathAlgebra pa = example45_algebra();
  CHECK(validate_idempotent_set(pa.alg, pa.vertex_idempotents).ok());

  Field f2 = Field::gf(2);
  auto d = dual_numbers(f2);
  IdempotentSet one_set;
  one_set.elems.push_back(algebra_one(d));
  CHECK(validate_idempotent_set(d, one_set).ok());  // local: {1} is primitive

  // {1_x + 1_y} = {1} in the Example 4.5 algebra fails primitivity with dim 2.
  IdempotentSet coarse;
  coarse.elems.push_back(algebra_one(pa.alg));
  IdemValidation v = validate_idempotent_set(pa.alg, coarse);
  CHECK(v.failure == IdemValidation::Failure::NotPrimitive);
  CHECK(v.corner_dim == 2);

  // GF(4) viewed as a GF(2)-algebra is not split.
  Field f4 = Field::gf(2, 2);
  std::vector<FDAlgebra::Quad> q = {
      {0, 0, 0, Scalar::one(f2)}, {0, 1, 1, Scalar::one(f2)}, {1, 0, 1, Scalar::one(f2)},
      {1, 1, 1, Scalar::one(f2)}, {1, 1, 0, Scalar::one(f2)}};  // t^2 = t + 1
  auto gf4_alg = FDAlgebra::from_structure_constants(f2, 2, q, unit_vec(f2, 2, 0));
  IdempotentSet s;
  s.elems.push_back(algebra_one(gf4_alg));
  IdemValidation nv = validate_idempotent_set(gf4_alg, s);
  CHECK(nv.failure == IdemValidation::Failure::NotSplit);
  (void)f4;
}

TEST_CASE("characterize local commutative") {
  Field f = Field::gf(2);
  auto d = dual_numbers(f);
  AlgebraProfile p = characterize_local_commutative(d);
  CHECK(p.dim == 2);
  CHECK(p.commutative);
  CHECK(p.local);
  CHECK(p.loewy == std::vector<size_t>{1, 1});

  AlgebraProfile p2 = characterize_local_commutative(product_of_two_fields(f));
  CHECK(p2.dim == 2);
  CHECK(p2.commutative);
  CHECK(!p2.local);
  CHECK(p2.loewy == std::vector<size_t>{2});
}

TEST_CASE("split context refines idempotents") {
  Field f = Field::gf(3);
  // k x k from the coarse seed {1}.
  SplitPtr s = make_split_algebra(product_of_two_fields(f));
  CHECK(s->E.size() == 2);
  CHECK(s->num_classes() == 2);

  // Matrix algebra: two idempotents in one class.
  SplitPtr m = make_split_algebra(matrix2(f));
  CHECK(m->E.size() == 2);
  CHECK(m->num_classes() == 1);

  PathAlgebra pa = example45_algebra();
  SplitPtr s45 = make_split_algebra(pa.alg, pa.vertex_idempotents);
  CHECK(s45->E.size() == 2);
  CHECK(s45->num_classes() == 2);  // e_x and e_y are not isomorphic in A
}
