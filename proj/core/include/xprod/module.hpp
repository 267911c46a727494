#pragma once

#include <cstdint>
#include <random>

#include "xprod/algebra.hpp"

namespace xprod {

// Finite-dimensional left module: one action matrix per algebra basis
// element.  Construction verifies compatibility with the structure constants
// and the identity law.
class FDModule {
 public:
  FDModule() = default;
  FDModule(AlgebraPtr a, std::vector<Matrix> action);

  static FDModule regular(const AlgebraPtr& a);
  static FDModule zero_module(const AlgebraPtr& a);

  const AlgebraPtr& algebra() const { return a_; }
  size_t dim() const { return dim_; }
  const Matrix& act(size_t i) const { return act_[i]; }
  Matrix act_element(const Vec& coords) const;

 private:
  AlgebraPtr a_;
  size_t dim_ = 0;
  std::vector<Matrix> act_;
};

struct SubModule {
  FDModule mod;
  Matrix embed;  // dim parent x dim sub
};
// S must be invariant under the action; verified.
SubModule submodule(const FDModule& m, const Subspace& s);

struct QuotModule {
  FDModule mod;
  Matrix proj;
  Matrix section;
};
QuotModule quotient_module(const FDModule& m, const Subspace& s);

struct DirectSum {
  FDModule mod;
  std::vector<size_t> offsets;  // start coordinate of each summand
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<FDModule>& parts);

// Smallest submodule containing the given vectors.
Subspace submodule_generated(const FDModule& m, const std::vector<Vec>& gens);

// Basis of the intertwiner space Hom_A(M, N), computed one basis-element
// constraint at a time.
std::vector<Matrix> hom_space(const FDModule& m, const FDModule& n);

struct IsoResult {
  enum class Status { Yes, No, Undetermined };
  Status status;
  Matrix witness;  // invertible intertwiner when Yes
};

struct IsoOptions {
  uint64_t seed = 12345;
  size_t random_trials = 200;
  uint64_t exhaustive_limit = 65536;  // enumerate q^h combinations up to this
};

// Invertible-intertwiner search: exhaustive over small finite hom spaces,
// seeded random combinations beyond that (then a miss is Undetermined).
IsoResult is_isomorphic(const FDModule& m, const FDModule& n, const IsoOptions& opt = {});

// Deterministic pseudo-random module: quotient of a free module by the
// submodule generated by seeded random vectors.
FDModule random_module(const AlgebraPtr& a, size_t free_rank, size_t num_relations,
                       std::mt19937_64& rng);
Scalar random_scalar(const Field& f, std::mt19937_64& rng);

}  // namespace xprod
