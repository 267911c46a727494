#pragma once

#include "xprod/resolve.hpp"
#include "xprod/separability.hpp"

namespace xprod {

FDModule restrict_module(const FDModule& m, const SubalgebraEmbed& emb);

// R (x)_S N as the quotient of R (x)_k N by span{ rs (x) v - r (x) sv };
// flat index of r_a (x) v_j is a*dimN + j.
struct InducedModule {
  FDModule mod;  // over R
  LinearQuotient q;
};
// expected_dim, when nonzero, cross-checks the freeness rank.
InducedModule induce_module(const FDModule& n, const SubalgebraEmbed& emb,
                            size_t expected_dim = 0);

// Prop 3.1(1): pi_M(r (x) v) = pi(r) v splits delta_M(v) = 1 (x) v, with pi
// the projection of R onto the embedded copy of S.  `pi` must satisfy
// pi(s r) = s pi(r)-style bimodule splitting; for crossed products it is the
// projection onto the subgroup blocks.
struct SplitPair {
  Matrix first;   // later map
  Matrix second;  // earlier map
  bool composite_is_identity = false;
};
// pi_S: dim S x dim R matrix with pi_S . embed = id_S.
SplitPair pi_delta_check(const FDModule& m_over_s, const SubalgebraEmbed& emb, const Matrix& pi_s);

// Prop 3.1(2): psi_N(r (x) v) = r v splits phi_N(v) = sum a_i (x) b_i v.
SplitPair phi_psi_check(const FDModule& n_over_r, const SubalgebraEmbed& emb,
                        const SeparabilityElement& zeta);

// Subgroup-block projection pi for a crossed pair.
Matrix degree_projection(const CrossedProduct& cp, const SubCrossed& sub);

// Theorem 4.3(1) on one module: pd over CP vs pd of the restriction over A.
struct SpotCheck {
  DimStatus pd_top;     // over R
  DimStatus pd_bottom;  // restriction over S
  bool monotone = false;        // bottom <= top whenever both determined
  bool equal_when_finite = false;  // top Finite => equal
  bool consistent() const { return monotone && equal_when_finite; }
};
SpotCheck theorem_4_3_spotcheck(const SplitAlgebra& top, const SplitAlgebra& bottom,
                                const SubalgebraEmbed& emb, const FDModule& m, size_t cutoff = 20,
                                const IsoOptions& iso = {});

// Sup of the finite projective dimensions over the family: a lower bound for
// the finitistic dimension, never an exact value.
struct FdimProbe {
  size_t lower_bound = 0;
  size_t finite_count = 0;
  size_t undetermined = 0;
};
FdimProbe fdim_probe(const SplitAlgebra& s, const std::vector<FDModule>& family,
                     size_t cutoff = 20, const IsoOptions& iso = {});

// dim Ext^1_S(M|_S, N) = dim Ext^1_R(M, R (x)_S N), both sides by resolutions.
struct EckmannShapiro {
  size_t lhs = 0, rhs = 0;
  bool equal = false;
};
EckmannShapiro eckmann_shapiro_check(const SplitAlgebra& top, const SplitAlgebra& bottom,
                                     const SubalgebraEmbed& emb, const FDModule& m_over_r,
                                     const FDModule& n_over_s);

}  // namespace xprod
