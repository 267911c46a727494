#pragma once

#include "xprod/module.hpp"
#include "xprod/params.hpp"

namespace xprod {

// The algebra A^sigma_alpha G on basis {(i, x)} with flat index x*dim(A)+i
// and multiplication (a sigma_x)(b sigma_y) = a sigma_x(b) alpha(x,y) sigma_xy.
class CrossedProduct {
 public:
  // ps must validate; it is convention-normalized here if needed.  The
  // assembled algebra passes the full associativity scan by construction.
  static CrossedProduct build(const ParameterSet& ps);

  const AlgebraPtr& algebra() const { return cp_; }
  const ParameterSet& params() const { return ps_; }
  const AlgebraPtr& base() const { return ps_.A; }
  const GroupPtr& group() const { return ps_.G; }

  size_t flat(size_t i, uint32_t x) const { return size_t(x) * ps_.A->dim() + i; }
  uint32_t group_of(size_t flat_index) const { return uint32_t(flat_index / ps_.A->dim()); }

  AlgebraElement sigma_elem(uint32_t x) const;       // 1_A sigma_x
  AlgebraElement embed_base(const Vec& a_coords) const;  // a sigma_1
  Matrix base_embedding() const;                     // dim CP x dim A

 private:
  AlgebraPtr cp_;
  ParameterSet ps_;
};

struct SubCrossed {
  CrossedProduct sub;   // A^sigma_alpha H over the subgroup's own indices
  Matrix embed;         // dim CP x dim sub, unital algebra embedding
  Subgroup h;
  std::vector<uint32_t> to_parent;
};
SubCrossed restrict_to_subgroup(const CrossedProduct& cp, const Subgroup& h);

// Canonical quotient bookkeeping for a subspace of a coordinate space.
struct LinearQuotient {
  Matrix proj;     // ambient -> quotient
  Matrix section;  // quotient -> ambient representatives
  size_t dim() const { return proj.rows(); }
};
LinearQuotient linear_quotient(const Subspace& s);

// The left ideal generated by {sigma_x - 1 | x != 1} (closure iteration) and
// the induced module structure on CP / ideal.
struct TrivialRep {
  Subspace ideal;
  LinearQuotient q;
  FDModule mod;
};
TrivialRep trivial_representation(const CrossedProduct& cp);

Subspace fixed_subalgebra(const FDAlgebra& a, const std::vector<Matrix>& sigma,
                          const Subgroup& h);
// Solutions of sigma_x v = v in a module over the crossed product.
Subspace fixed_points(const CrossedProduct& cp, const FDModule& m, const Subgroup& h);

// The fixed algebra as an algebra of its own, with its embedding.
struct FixedAlgebra {
  AlgebraPtr alg;
  Matrix embed;
};
FixedAlgebra fixed_subalgebra_as_algebra(const AlgebraPtr& a, const std::vector<Matrix>& sigma,
                                         const Subgroup& h);

Matrix trace_matrix(const std::vector<Matrix>& sigma, const Subgroup& h);
Subspace trace_image(const FDAlgebra& a, const std::vector<Matrix>& sigma, const Subgroup& h);

// Prop 4.2(4): for skew group rings, solve trace(a) = 1.
struct TraceProjectivity {
  enum class Status { Projective, NotProjective, NotApplicable };
  Status status;
  Vec witness;  // a with trace(a) = 1 when projective
};
TraceProjectivity trivial_is_projective(const CrossedProduct& cp);

}  // namespace xprod
