#pragma once

#include "xprod/algebra.hpp"
#include "xprod/group.hpp"

namespace xprod {

// The pair (sigma, alpha) defining a crossed product: one automorphism
// matrix per group element and a unit of A per pair of group elements.
struct ParameterSet {
  AlgebraPtr A;
  GroupPtr G;
  std::vector<Matrix> sigma;       // indexed by group element
  std::vector<std::vector<Vec>> alpha;  // alpha[x][y] coordinates in A

  const Matrix& sig(uint32_t x) const { return sigma[x]; }
  AlgebraElement alp(uint32_t x, uint32_t y) const { return {A, alpha[x][y]}; }

  static ParameterSet group_algebra(AlgebraPtr a, GroupPtr g);  // sigma = id, alpha = 1
  static ParameterSet skew(AlgebraPtr a, GroupPtr g, std::vector<Matrix> sigma);
};

struct PSValidation {
  enum class Failure { None, NotAutomorphism, NotUnit, Condition1, Condition2 };
  Failure failure = Failure::None;
  uint32_t x = 0, y = 0, z = 0;
  bool ok() const { return failure == Failure::None; }
  std::string describe() const;
};

// Exhaustive check of the two parameter-set conditions
//   (1) sigma_x sigma_y = iota_{alpha(x,y)} sigma_{xy}
//   (2) alpha(x,y) alpha(xy,z) = sigma_x(alpha(y,z)) alpha(x,yz)
// plus automorphism and unit validity.
PSValidation validate_parameter_set(const ParameterSet& ps);

bool is_convention_normalized(const ParameterSet& ps);  // alpha(1,y)=alpha(x,1)=1, sigma_1=id

// Basis change making 1_A sigma_1 the identity: the equivalence given by
// u_x = sigma_x(alpha(1,1))^{-1}.  No-op when already normalized.
ParameterSet normalize_convention(const ParameterSet& ps);

// sigma'_x = sigma_x iota_{u_x}, alpha'(x,y) = u_x sigma_x(u_y) alpha(x,y) u_{xy}^{-1}.
ParameterSet apply_equivalence(const ParameterSet& ps, const std::vector<AlgebraElement>& units);

// Restriction of the maps to a subgroup, as a parameter set over the
// subgroup's own index space.
struct RestrictedParams {
  ParameterSet ps;
  std::vector<uint32_t> to_parent;
};
RestrictedParams restrict_params(const ParameterSet& ps, const Subgroup& h);

// Lemma 3.5 identities (3.1)-(3.4) evaluated on every pair of the subgroup,
// plus the product identity (5.1) when alpha takes central values there.
struct IdentityReport {
  size_t pairs_checked = 0;
  size_t violations[5] = {0, 0, 0, 0, 0};  // (3.1)..(3.4), (5.1)
  bool five_one_applicable = false;
  uint32_t witness_x = 0, witness_y = 0;
  int witness_identity = -1;
  size_t total_violations() const {
    size_t t = 0;
    for (size_t v : violations) t += v;
    return t;
  }
};
IdentityReport cocycle_identities_check(const ParameterSet& ps, const Subgroup& h);

// Equivalence data turning a scalar-alpha crossed product over a p-group
// into a skew group algebra: h_x = prod_y alpha(x,y), u_x the unique
// |S|-th root of h_x, extracted by inverse Frobenius.
struct NormalizationData {
  std::vector<AlgebraElement> h;
  std::vector<AlgebraElement> u;
  ParameterSet result;
};
NormalizationData normalize_to_skew(const ParameterSet& ps_on_s);

}  // namespace xprod
