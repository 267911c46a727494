#pragma once

#include "xprod/induction.hpp"
#include "xprod/resolve.hpp"

namespace xprod {

// Block matrix over an algebra: entry (t,s) acts on left modules by right
// multiplication, and an element p of the source maps to p * M (row
// convention), so composition reads left to right.
struct AMatrix {
  AlgebraPtr A;
  size_t rows = 0, cols = 0;
  std::vector<Vec> ent;  // row-major

  static AMatrix zero(const AlgebraPtr& a, size_t r, size_t c);
  static AMatrix identity_on(const AlgebraPtr& a, const std::vector<Vec>& idems);
  const Vec& at(size_t r, size_t c) const { return ent[r * cols + c]; }
  Vec& at(size_t r, size_t c) { return ent[r * cols + c]; }
  AMatrix mul(const AMatrix& o) const;
  AMatrix add(const AMatrix& o) const;
  AMatrix negated() const;
  bool is_zero() const;
  bool operator==(const AMatrix& o) const;
};

// Bounded complex of projectives P^k = direct sum of A e_i, the terms given
// by lists of idempotent indices into the split context's E.
class PerfectComplex {
 public:
  PerfectComplex() = default;
  // Verifies entries lie in e_t A e_s and d^2 = 0.
  PerfectComplex(SplitPtr ctx, int lo, std::vector<std::vector<uint32_t>> terms,
                 std::vector<AMatrix> diffs);

  const SplitPtr& context() const { return ctx_; }
  int lo() const { return lo_; }
  size_t length() const { return terms_.size(); }
  const std::vector<uint32_t>& term(size_t k) const { return terms_[k]; }
  const AMatrix& diff(size_t k) const { return diffs_[k]; }  // terms k -> k+1

  std::vector<size_t> multiplicity_vector(size_t k) const;  // per idempotent

 private:
  friend struct MinimalizeResult;
  friend MinimalizeResult minimalize(const PerfectComplex& p);
  SplitPtr ctx_;
  int lo_ = 0;
  std::vector<std::vector<uint32_t>> terms_;
  std::vector<AMatrix> diffs_;
};

struct ComplexMetrics {
  bool zero = false;
  int sup = 0, inf = 0;
  int amplitude() const { return sup - inf; }  // meaningless when zero
  std::string to_string() const;
};
ComplexMetrics metrics(const PerfectComplex& p);

// Stalk complex P in one degree.
PerfectComplex stalk_complex(const SplitPtr& ctx, int degree, std::vector<uint32_t> summands);

// Truncated minimal resolution of M in degrees [-steps, 0]: P_steps -> ... -> P_0.
PerfectComplex resolution_complex(const SplitPtr& ctx, const FDModule& m, size_t steps);

struct MinimalizeResult {
  PerfectComplex min;
  // Chain maps f: P -> min(P), g: min(P) -> P and a homotopy h with
  // f.g = id (degreewise) and g.f - id = dh + hd, all over original terms.
  std::vector<AMatrix> f, g, h;
  bool witnesses_verified = false;
};
// Gaussian elimination on the complex: repeatedly split off an invertible
// differential entry (lowest degree first, then row-major), until every
// entry lies in the radical.
MinimalizeResult minimalize(const PerfectComplex& p);

// Amplitude of the minimalized complex; the zero complex has no length.
std::optional<int> complex_length(const PerfectComplex& p);

// Realization as concrete modules and linear maps (for cross-validation and
// the chain-split checks).
struct ConcreteComplex {
  std::vector<FDModule> mods;
  std::vector<Matrix> maps;  // maps[k]: mods[k] -> mods[k+1], module maps
  int lo = 0;
};
ConcreteComplex realize(const PerfectComplex& p);

// Termwise induction along the base embedding of a crossed product whose
// idempotent set extends the base algebra's; term indices carry over.
PerfectComplex induce_complex(const PerfectComplex& p, const CrossedProduct& cp,
                              const SplitPtr& top_ctx);

// Termwise restriction to a subalgebra: each restricted projective is
// re-expressed through its projective cover (an isomorphism).
PerfectComplex restrict_complex(const PerfectComplex& p, const SubalgebraEmbed& emb,
                                const SplitPtr& bottom_ctx);

struct ChainSplitReport {
  bool chain_maps = false;
  bool composite_identity = false;
  bool ok() const { return chain_maps && composite_identity; }
};
// Prop 3.2(2): pi . delta = id termwise on a concrete complex over S.
ChainSplitReport chain_pi_delta_check(const ConcreteComplex& q, const SubalgebraEmbed& emb,
                                      const Matrix& pi_s);
// Prop 3.2(3): psi . phi = id termwise on a concrete complex over R.
ChainSplitReport chain_phi_psi_check(const ConcreteComplex& p, const SubalgebraEmbed& emb,
                                     const SeparabilityElement& zeta);

}  // namespace xprod
