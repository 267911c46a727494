#include "doctest.h"
#include "fixtures.hpp"
#include "xprod/errors.hpp"

using namespace xprod;
using namespace xfix;

TEST_CASE("single vertex quiver is the ground field") {
  BoundQuiver q;
  q.field = Field::gf(5);
  q.vertices = {"v"};
  PathAlgebra pa = path_algebra(q);
  CHECK(pa.alg->dim() == 1);
  CHECK(pa.vertex_idempotents.size() == 1);
  CHECK(pa.arrow_radical.dim() == 0);
}

TEST_CASE("example 4.5 quiver: dim 4 basis {e_x, e_y, beta, gamma}") {
  PathAlgebra pa = example45_algebra();
  REQUIRE(pa.alg->dim() == 4);
  CHECK(pa.path_name(0) == "e_x");
  CHECK(pa.path_name(1) == "e_y");
  CHECK(pa.path_name(2) == "beta");
  CHECK(pa.path_name(3) == "gamma");

  const Field f = pa.alg->field();
  Vec beta = unit_vec(f, 4, 2), gamma = unit_vec(f, 4, 3);
  // beta gamma = gamma beta = 0 by the relations
  CHECK(vec_is_zero(pa.alg->multiply(beta, gamma)));
  CHECK(vec_is_zero(pa.alg->multiply(gamma, beta)));
  // beta * e_x = beta (beta starts at x), e_y * beta = beta
  CHECK(pa.alg->multiply(beta, unit_vec(f, 4, 0)) == beta);
  CHECK(pa.alg->multiply(unit_vec(f, 4, 1), beta) == beta);
  CHECK(vec_is_zero(pa.alg->multiply(unit_vec(f, 4, 0), beta)));
}

TEST_CASE("example 5.4 quiver: dim 5, no length-2 paths") {
  PathAlgebra pa = example54_algebra();
  CHECK(pa.alg->dim() == 5);  // path enumeration oracle: 3 vertices + 2 arrows
  CHECK(pa.arrow_radical.dim() == 2);
}

TEST_CASE("loop with nilpotency relation") {
  BoundQuiver q;
  q.field = Field::gf(2);
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  q.relations.push_back({{{Scalar::one(q.field), Path{0, 0}}}});
  PathAlgebra pa = path_algebra(q);
  CHECK(pa.alg->dim() == 2);  // k[X]/(X^2)
  AlgebraProfile prof = characterize_local_commutative(pa.alg);
  CHECK(prof.local);

  BoundQuiver unbound = q;
  unbound.relations.clear();
  CHECK_THROWS_AS(path_algebra(unbound), InfiniteDimensional);
}

TEST_CASE("inadmissible relations are rejected") {
  BoundQuiver q;
  q.field = Field::gf(2);
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  q.relations.push_back({{{Scalar::one(q.field), Path{0}}}});  // length 1
  CHECK_THROWS_AS(path_algebra(q), InhomogeneousRelation);

  BoundQuiver mixed;
  mixed.field = Field::gf(2);
  mixed.vertices = {"v"};
  mixed.arrows = {{"x", 0, 0}};
  mixed.relations.push_back({{{Scalar::one(mixed.field), Path{0, 0}},
                              {Scalar::one(mixed.field), Path{0, 0, 0}}}});
  CHECK_THROWS_AS(path_algebra(mixed), InhomogeneousRelation);
}

TEST_CASE("commutativity relation (binomial)") {
  // Square with two parallel length-2 paths identified.
  BoundQuiver q;
  q.field = Field::gf(3);
  q.vertices = {"1", "2", "3", "4"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
  q.relations.push_back(
      {{{Scalar::one(q.field), Path{0, 2}}, {-Scalar::one(q.field), Path{1, 3}}}});
  PathAlgebra pa = path_algebra(q);
  // 4 vertices + 4 arrows + 1 surviving length-2 class
  CHECK(pa.alg->dim() == 9);
  CHECK(pa.reduce_path({0, 2}) == pa.reduce_path({1, 3}));
}

TEST_CASE("symmetry to automorphism") {
  PathAlgebra pa = example45_algebra();
  Matrix id = symmetry_to_automorphism(pa, {{0, 1}, {0, 1}});
  CHECK(id.is_identity());

  Matrix sw = symmetry_to_automorphism(pa, example45_swap());
  CHECK(sw * sw == Matrix::identity(pa.alg->field(), 4));
  CHECK(!sw.is_identity());

  PathAlgebra p54 = example54_algebra();
  Matrix sw54 = symmetry_to_automorphism(p54, example54_swap());
  CHECK(sw54 * sw54 == Matrix::identity(p54.alg->field(), 5));
  CHECK(sw54.col(1) == unit_vec(p54.alg->field(), 5, 1));  // fixes e_2

  // A symmetry breaking the relations: square quiver with only one
  // commutativity relation direction... use the nilpotent loop with x -> x
  // but relation x^2 vs x^3 mismatch is inhomogeneous; instead check a
  // rotation that maps a zero relation onto a nonzero class.
  BoundQuiver q;
  q.field = Field::gf(2);
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
  q.relations.push_back({{{Scalar::one(q.field), Path{0, 1}}}});  // b a = 0 only
  PathAlgebra rot = path_algebra(q, 16);
  CHECK_THROWS_AS(symmetry_to_automorphism(rot, {{1, 2, 0}, {1, 2, 0}}), RelationsNotPreserved);
}

TEST_CASE("c3 cycle fixture dimension") {
  PathAlgebra pa = c3_cycle_algebra(Field::gf(2));
  CHECK(pa.alg->dim() == 6);
  Matrix rot = symmetry_to_automorphism(pa, c3_rotation());
  Matrix r3 = rot * rot * rot;
  CHECK(r3.is_identity());
}
