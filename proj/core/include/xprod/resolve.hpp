#pragma once

#include "xprod/module.hpp"
#include "xprod/split.hpp"

namespace xprod {

// A e_i with its embedding into the regular module.
struct ProjIndec {
  FDModule mod;
  Matrix embed;  // dim A x dim(Ae_i)
};
ProjIndec projective_indecomposable(const SplitAlgebra& s, size_t idem_index);

// Simple module of an isomorphism class: top of A e_rep.
FDModule simple_module(const SplitAlgebra& s, size_t class_index);

// Multiplicity of each simple class in M / rad M.
std::vector<size_t> top_vector(const SplitAlgebra& s, const FDModule& m);

struct Cover {
  FDModule p;
  std::vector<size_t> mult;       // per class
  std::vector<size_t> summands;   // idempotent index per summand, expanded
  Matrix epi;                     // dim M x dim P, surjective, ker <= rad P
};
// Minimal projective cover; surjectivity and ker <= rad P are verified.
Cover projective_cover(const SplitAlgebra& s, const FDModule& m);

struct SyzygyStep {
  Cover cover;
  FDModule omega;  // kernel of the cover epimorphism
  Matrix embed;    // dim P x dim omega
};
SyzygyStep syzygy(const SplitAlgebra& s, const FDModule& m);

struct DimStatus {
  enum class Kind { Finite, Infinite, Undetermined };
  Kind kind = Kind::Undetermined;
  size_t value = 0;     // finite value
  size_t cycle_i = 0, cycle_j = 0;  // witness for Infinite
  bool operator==(const DimStatus&) const = default;
  std::string to_string() const;
};

struct ResolutionReport {
  std::vector<std::vector<size_t>> terms;  // cover multiplicity vector per step
  std::vector<size_t> syzygy_dims;
  DimStatus status;
};

// Minimal resolution by iterated covers; infinitude is certified by a
// syzygy-isomorphism cycle Omega^i = Omega^j != 0, soundness coming from
// uniqueness of minimal resolutions.
ResolutionReport pd_report(const SplitAlgebra& s, const FDModule& m, size_t cutoff = 20,
                           const IsoOptions& iso = {});

struct GlobalDimReport {
  std::vector<ResolutionReport> per_simple;
  DimStatus status;
};
GlobalDimReport gldim_report(const SplitAlgebra& s, size_t cutoff = 20, const IsoOptions& iso = {});

// dim Ext^1(S_i, S_j) = multiplicity of S_j in top(Omega S_i); class indices.
size_t ext1_dim(const SplitAlgebra& s, size_t class_i, size_t class_j);

// dim Ext^1(M, N) from the start of a minimal resolution of M.
size_t ext1_dim_modules(const SplitAlgebra& s, const FDModule& m, const FDModule& n);

// Loop data of the (Ext-)quiver at each idempotent class: dim of
// e (rad/rad^2) e over class representatives.
std::vector<size_t> loop_counts(const SplitAlgebra& s);

}  // namespace xprod
