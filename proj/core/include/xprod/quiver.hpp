#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xprod/algebra.hpp"

namespace xprod {

// A path is the sequence of arrows it traverses, first-applied first.
// Composition of paths (and everything downstream) is right to left: p*q
// means "q, then p", so p*q is defined when target(q) == source(p).
using Path = std::vector<uint32_t>;

struct BoundQuiver {
  struct Arrow {
    std::string name;
    uint32_t src, dst;
  };
  struct Relation {
    std::vector<std::pair<Scalar, Path>> terms;
  };

  Field field;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  uint32_t path_source(const Path& p) const;
  uint32_t path_target(const Path& p) const;
  bool path_valid(const Path& p) const;
};

struct QuiverSymmetry {
  std::vector<uint32_t> vertex_perm;
  std::vector<uint32_t> arrow_perm;
};

// The quotient of the path algebra by the relation ideal.  Basis vectors are
// path classes enumerated by length then lexicographically by arrow
// sequence; vertex classes come first and form the canonical idempotent set;
// positive-length classes span the radical.
struct PathAlgebra {
  AlgebraPtr alg;
  BoundQuiver quiver;
  IdempotentSet vertex_idempotents;
  Subspace arrow_radical;
  std::vector<Path> basis_paths;  // one representative path per basis index

  // Class of an arbitrary path in the basis, after reduction by relations.
  Vec reduce_path(const Path& p) const;
  std::string path_name(size_t basis_index) const;
};

// Throws InfiniteDimensional when enumeration does not stabilize and
// InhomogeneousRelation for non-admissible relations (paths of length < 2,
// mixed endpoints, or mixed lengths).
PathAlgebra path_algebra(const BoundQuiver& q, size_t length_cap = 64);

// The induced linear map on path classes; verified to be an algebra
// automorphism and to preserve the relation ideal.
Matrix symmetry_to_automorphism(const PathAlgebra& pa, const QuiverSymmetry& s);

}  // namespace xprod
