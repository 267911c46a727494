#include "doctest.h"
#include "xprod/errors.hpp"
#include "xprod/group.hpp"

using namespace xprod;

TEST_CASE("validation") {
  auto t = FiniteGroup::trivial();
  CHECK(t->order() == 1);
  auto c2 = FiniteGroup::cyclic(2);
  CHECK(c2->identity() == 0);
  CHECK(c2->mul(1, 1) == 0);

  // Corrupt one entry of the C4 table: the scan reports a witness.
  auto c4 = FiniteGroup::cyclic(4);
  auto bad = c4->table();
  bad[1][2] = 0;  // should be 3
  CHECK_THROWS_AS(FiniteGroup::validate(bad), GroupTableError);
}

TEST_CASE("s3 structure") {
  auto s3 = FiniteGroup::symmetric3();
  CHECK(s3->order() == 6);
  size_t order2 = 0, order3 = 0;
  for (uint32_t g = 0; g < 6; ++g) {
    if (s3->element_order(g) == 2) ++order2;
    if (s3->element_order(g) == 3) ++order3;
  }
  CHECK(order2 == 3);
  CHECK(order3 == 2);
}

TEST_CASE("sylow subgroups") {
  auto c2 = FiniteGroup::cyclic(2);
  CHECK(sylow_subgroup(c2, 2).order() == 2);

  auto c3 = FiniteGroup::cyclic(3);
  CHECK(sylow_subgroup(c3, 2).order() == 1);  // 2 does not divide 3

  auto s3 = FiniteGroup::symmetric3();
  Subgroup syl2 = sylow_subgroup(s3, 2);
  CHECK(syl2.order() == 2);
  Subgroup syl3 = sylow_subgroup(s3, 3);
  CHECK(syl3.order() == 3);
  // Lagrange and p-part exactness
  CHECK(6 % syl2.order() == 0);
  // Deterministic: the lexicographically least conjugate.
  Subgroup again = sylow_subgroup(s3, 2);
  CHECK(again.elems == syl2.elems);

  auto v4 = FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::cyclic(2));
  CHECK(sylow_subgroup(v4, 2).order() == 4);

  auto c12 = FiniteGroup::direct_product(*FiniteGroup::cyclic(4), *FiniteGroup::cyclic(3));
  CHECK(sylow_subgroup(c12, 2).order() == 4);
  CHECK(sylow_subgroup(c12, 3).order() == 3);
}

TEST_CASE("cosets") {
  auto s3 = FiniteGroup::symmetric3();
  CHECK(left_cosets(*s3, full_subgroup(s3)) == std::vector<uint32_t>{0});
  CHECK(left_cosets(*s3, trivial_subgroup(s3)).size() == 6);

  Subgroup syl3 = sylow_subgroup(s3, 3);
  auto reps = left_cosets(*s3, syl3);
  CHECK(reps.size() == 2);
  // Cosets cover G disjointly.
  std::vector<bool> seen(6, false);
  for (uint32_t r : reps)
    for (uint32_t h : syl3.elems) {
      uint32_t g = s3->mul(r, h);
      CHECK(!seen[g]);
      seen[g] = true;
    }
  for (bool b : seen) CHECK(b);
}

TEST_CASE("subgroup as group") {
  auto s3 = FiniteGroup::symmetric3();
  SubgroupGroup sg = subgroup_as_group(sylow_subgroup(s3, 3));
  CHECK(sg.group->order() == 3);
  CHECK(sg.group->element_order(1) == 3);
}
