#pragma once

// Shared constructions used across the test suites.

#include "xprod/crossed.hpp"
#include "xprod/group.hpp"
#include "xprod/params.hpp"
#include "xprod/quiver.hpp"
#include "xprod/split.hpp"

namespace xfix {

using namespace xprod;

// k[X]/(X^2) over the given field: basis {1, x}.
inline AlgebraPtr dual_numbers(const Field& f) {
  std::vector<FDAlgebra::Quad> q = {
      {0, 0, 0, Scalar::one(f)},
      {0, 1, 1, Scalar::one(f)},
      {1, 0, 1, Scalar::one(f)},
  };
  return FDAlgebra::from_structure_constants(f, 2, q, unit_vec(f, 2, 0));
}

// The ground field as a one-dimensional algebra.
inline AlgebraPtr field_algebra(const Field& f) {
  std::vector<FDAlgebra::Quad> q = {{0, 0, 0, Scalar::one(f)}};
  return FDAlgebra::from_structure_constants(f, 1, q, unit_vec(f, 1, 0));
}

// k x k: two orthogonal idempotents.
inline AlgebraPtr product_of_two_fields(const Field& f) {
  std::vector<FDAlgebra::Quad> q = {{0, 0, 0, Scalar::one(f)}, {1, 1, 1, Scalar::one(f)}};
  Vec one = zero_vec(f, 2);
  one[0] = one[1] = Scalar::one(f);
  return FDAlgebra::from_structure_constants(f, 2, q, one);
}

// 2x2 matrix algebra, basis E11,E12,E21,E22.
inline AlgebraPtr matrix2(const Field& f) {
  auto idx = [](uint32_t r, uint32_t c) { return r * 2 + c; };
  std::vector<FDAlgebra::Quad> q;
  for (uint32_t i = 0; i < 2; ++i)
    for (uint32_t j = 0; j < 2; ++j)
      for (uint32_t k = 0; k < 2; ++k)
        for (uint32_t l = 0; l < 2; ++l)
          if (j == k) q.push_back({idx(i, j), idx(k, l), idx(i, l), Scalar::one(f)});
  Vec one = zero_vec(f, 4);
  one[idx(0, 0)] = one[idx(1, 1)] = Scalar::one(f);
  return FDAlgebra::from_structure_constants(f, 4, q, one);
}

// The two-vertex cyclic quiver x <-> y with beta gamma = gamma beta = 0;
// basis {e_x, e_y, beta, gamma}.  Arrows: beta: x -> y, gamma: y -> x.
inline BoundQuiver cycle_quiver(const Field& f) {
  BoundQuiver q;
  q.field = f;
  q.vertices = {"x", "y"};
  q.arrows = {{"beta", 0, 1}, {"gamma", 1, 0}};
  // beta*gamma (gamma then beta) and gamma*beta.
  q.relations.push_back({{{Scalar::one(f), Path{1, 0}}}});
  q.relations.push_back({{{Scalar::one(f), Path{0, 1}}}});
  return q;
}

inline PathAlgebra example45_algebra() { return path_algebra(cycle_quiver(Field::gf(2))); }

inline QuiverSymmetry example45_swap() { return {{1, 0}, {1, 0}}; }

// Skew parameter set of the cycle-quiver swap over C2.
inline ParameterSet example45_params(const PathAlgebra& pa) {
  GroupPtr c2 = FiniteGroup::cyclic(2);
  Matrix sw = symmetry_to_automorphism(pa, example45_swap());
  return ParameterSet::skew(pa.alg, c2, {Matrix::identity(pa.alg->field(), 4), sw});
}

// 1 -> 2 <- 3 over GF(2): arrows a: 1->2, b: 3->2; dim 5, hereditary.
inline BoundQuiver example54_quiver(const Field& f) {
  BoundQuiver q;
  q.field = f;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 2, 1}};
  return q;
}

inline PathAlgebra example54_algebra() { return path_algebra(example54_quiver(Field::gf(2))); }

// Swap 1 <-> 3, a <-> b, fix 2.
inline QuiverSymmetry example54_swap() { return {{2, 1, 0}, {1, 0}}; }

inline ParameterSet example54_params(const PathAlgebra& pa) {
  GroupPtr c2 = FiniteGroup::cyclic(2);
  Matrix sw = symmetry_to_automorphism(pa, example54_swap());
  return ParameterSet::skew(pa.alg, c2, {Matrix::identity(pa.alg->field(), 5), sw});
}

// Linear quiver 1 -> 2 (dim 3, hereditary).
inline PathAlgebra a2_algebra(const Field& f) {
  BoundQuiver q;
  q.field = f;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  return path_algebra(q);
}

// 1 -> 2 -> 3 with the length-2 path zero: gldim 2.
inline PathAlgebra a3_radsquare_algebra(const Field& f) {
  BoundQuiver q;
  q.field = f;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  q.relations.push_back({{{Scalar::one(f), Path{0, 1}}}});
  return path_algebra(q);
}

// Three-vertex cycle with all length-2 paths zero and the rotation symmetry.
inline PathAlgebra c3_cycle_algebra(const Field& f) {
  BoundQuiver q;
  q.field = f;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 0}};
  q.relations.push_back({{{Scalar::one(f), Path{0, 1}}}});
  q.relations.push_back({{{Scalar::one(f), Path{1, 2}}}});
  q.relations.push_back({{{Scalar::one(f), Path{2, 0}}}});
  return path_algebra(q);
}

inline QuiverSymmetry c3_rotation() { return {{1, 2, 0}, {1, 2, 0}}; }

// Two disjoint arrows 1->2, 3->4 with the C2 swap: free action fixture.
inline PathAlgebra two_arrows_algebra(const Field& f) {
  BoundQuiver q;
  q.field = f;
  q.vertices = {"1", "2", "3", "4"};
  q.arrows = {{"a", 0, 1}, {"b", 2, 3}};
  return path_algebra(q);
}

inline QuiverSymmetry two_arrows_swap() { return {{2, 3, 0, 1}, {1, 0}}; }

}  // namespace xfix
