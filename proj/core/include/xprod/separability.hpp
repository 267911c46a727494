#pragma once

#include "xprod/crossed.hpp"

namespace xprod {

// A unital subalgebra embedding S -> R given by the matrix of its basis in
// R-coordinates.  Construction verifies the algebra-map laws.
struct SubalgebraEmbed {
  AlgebraPtr R;
  AlgebraPtr S;
  Matrix embed;  // dim R x dim S
};
SubalgebraEmbed make_subalgebra_embed(AlgebraPtr r, AlgebraPtr s, Matrix embed);
SubalgebraEmbed base_embed(const CrossedProduct& cp);            // A inside CP
SubalgebraEmbed subgroup_embed(const CrossedProduct& cp, const SubCrossed& sub);

// R (x)_S R realized as the quotient of R (x)_k R by the balancing subspace
// span{ rs (x) r' - r (x) sr' }.  Flat index of r_a (x) r_b is a*dimR + b.
class TensorSquare {
 public:
  TensorSquare(const SubalgebraEmbed& emb);

  const SubalgebraEmbed& embedding() const { return emb_; }
  size_t dim() const { return q_.dim(); }
  const LinearQuotient& quotient() const { return q_; }

  Vec project(const Vec& flat) const { return q_.proj.apply(flat); }
  Vec simple_tensor(const Vec& a, const Vec& b) const;  // projected a (x) b

  Matrix left_action(size_t basis_i) const;   // r * (a (x) b) = (ra) (x) b
  Matrix right_action(size_t basis_i) const;  // (a (x) b) * r = a (x) (br)
  const Matrix& mult_map() const { return mult_; }  // a (x) b -> ab

 private:
  SubalgebraEmbed emb_;
  LinearQuotient q_;
  Matrix mult_;
};

struct SeparabilityElement {
  Vec lift;    // representative in R (x)_k R, flat coordinates
  Vec coords;  // class in the quotient space
};

struct SeparabilityCheck {
  bool commutes = false;      // zeta r = r zeta for every basis r
  bool multiplies_to_one = false;
  size_t witness_r = 0;       // first failing basis element
  bool ok() const { return commutes && multiplies_to_one; }
};
SeparabilityCheck check_separability_element(const TensorSquare& ts, const SeparabilityElement& z);

// zeta = |G:H|^{-1} sum over coset representatives of
// alpha(x, x^-)^{-1} sigma_x (x) sigma_{x^-}; the inverse follows the
// computation that proves Prop 3.6 (the displayed formula carries
// alpha(x,x^-) instead; see canonical_zeta_variants).
struct CanonicalZeta {
  SeparabilityElement zeta;
  bool representative_independent = false;  // recomputed with a second choice
};
CanonicalZeta canonical_separability_element(const CrossedProduct& cp, const SubCrossed& sub,
                                             const TensorSquare& ts);

// Both readings of the Prop 3.6 display, for the recorded-discrepancy test:
// first the proof's version (with the inverse), then the displayed one.
std::pair<SeparabilityElement, SeparabilityElement> canonical_zeta_variants(
    const CrossedProduct& cp, const SubCrossed& sub, const TensorSquare& ts);

// Linear search for any separability element: the conditions are linear, so
// unsolvability certifies non-separability.
std::optional<SeparabilityElement> find_separability_element(const TensorSquare& ts);

// Skew group rings over the base A: the trace of a central element must
// reach 1 for the extension to be separable.
struct CentralTraceCriterion {
  bool applicable = false;  // alpha trivial
  bool separable = false;
  Vec witness;              // central a with trace(a) = 1
  size_t center_trace_image_dim = 0;
};
CentralTraceCriterion central_trace_criterion(const CrossedProduct& cp);

}  // namespace xprod
