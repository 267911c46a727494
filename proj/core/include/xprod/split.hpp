#pragma once

#include "xprod/algebra.hpp"

namespace xprod {

// Everything resolution machinery needs about a split algebra: the radical,
// the semisimple quotient, a complete set of primitive orthogonal
// idempotents, and their isomorphism classes (e_i ~ e_j iff ebar_i Abar
// ebar_j != 0).
struct SplitAlgebra {
  AlgebraPtr A;
  Subspace rad;
  QuotientAlgebra bar;
  IdempotentSet E;
  std::vector<size_t> iso_class;  // per idempotent
  std::vector<size_t> class_rep;  // per class: least representative index

  size_t num_classes() const { return class_rep.size(); }
  AlgebraElement idem(size_t i) const { return E.elems[i]; }
};

using SplitPtr = std::shared_ptr<const SplitAlgebra>;

// Builds the context, decomposing the seed idempotents into primitive ones
// when needed (corner splitting in the semisimple quotient, lifted along the
// radical).  Throws NotSplit when a corner is a division algebra bigger than
// the ground field.  The one-argument form seeds with {1}.
SplitPtr make_split_algebra(AlgebraPtr a);
SplitPtr make_split_algebra(AlgebraPtr a, IdempotentSet seed);

}  // namespace xprod
