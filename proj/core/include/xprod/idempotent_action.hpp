#pragma once

#include "xprod/crossed.hpp"

namespace xprod {

// Action of the group of a crossed product A^sigma_alpha S on a complete set
// E of idempotents of A: sigma_x permutes E (else NotClosed).
struct IdemAction {
  std::vector<std::vector<size_t>> perm;  // perm[x][i]: index of sigma_x(e_i)
};
IdemAction action_on_idempotents(const ParameterSet& ps, const IdempotentSet& e);

struct FreeActionReport {
  bool free = false;
  std::vector<std::pair<uint32_t, size_t>> fixed_pairs;  // (x != 1, idempotent)
};
FreeActionReport free_action_check(const ParameterSet& ps, const IdemAction& act);

bool faithful_action_check(const ParameterSet& ps);

// Sum of one representative (least index) per orbit; verified idempotent.
struct OrbitEpsilon {
  std::vector<size_t> orbit_of;    // per idempotent
  std::vector<size_t> reps;        // least index per orbit
  AlgebraElement epsilon;
};
OrbitEpsilon orbit_epsilon(const ParameterSet& ps, const IdempotentSet& e, const IdemAction& act);

// mu = sigma_x(e) sigma_x and nu = alpha(x^-,x)^{-1} sigma_{x^-} satisfy
// mu nu = sigma_x(e), nu mu = e; from them a in eRf, b in fRe with ab = e,
// ba = f certify CP e = CP sigma_x(e).
struct OrbitIso {
  AlgebraElement mu, nu;
  AlgebraElement a, b;
  bool verified = false;  // all four identities plus the module isomorphism
};
OrbitIso orbit_idempotent_isomorphism(const CrossedProduct& cp, const AlgebraElement& e,
                                      uint32_t x);

// Prop 5.5 data: dim CP = |S|^2 dim(eps CP eps) and the regular module
// decomposes as (CP eps)^{|S|} through the orbit isomorphisms.
struct MatrixAlgebraReport {
  size_t corner_dim = 0;
  size_t group_order = 0;
  bool dim_identity = false;          // dim CP == |S|^2 * corner_dim
  bool translates_orthogonal = false; // sigma_x(eps) pairwise orthogonal, sum 1
  bool translates_isomorphic = false; // CP sigma_x(eps) = CP eps for all x
  bool ok() const { return dim_identity && translates_orthogonal && translates_isomorphic; }
};
MatrixAlgebraReport matrix_algebra_certificate(const CrossedProduct& cp, const IdempotentSet& e,
                                               const IdemAction& act);

// Prop 5.7: phi(a) = a sigma_x(eps) and psi(b sigma_x(eps)) = sum_y sigma_y(b
// sigma_x(eps)) are mutually inverse A^S-linear maps; also A^S = trace image.
struct FixedFreeReport {
  bool trace_image_is_fixed_algebra = false;
  bool all_translates_pass = false;  // phi/psi inverse for every x
  size_t witness_x = 0;
  bool ok() const { return trace_image_is_fixed_algebra && all_translates_pass; }
};
FixedFreeReport fixed_algebra_free_module_check(const ParameterSet& ps, const IdempotentSet& e,
                                                const IdemAction& act,
                                                const AlgebraElement& epsilon);

}  // namespace xprod
