#include "xprod/split.hpp"

#include "xprod/errors.hpp"

namespace xprod {

// Candidate scan from algebra.cpp.
namespace detail {
std::optional<Vec> proper_idempotent(const FDAlgebra& b);
}

SplitPtr make_split_algebra(AlgebraPtr a) {
  IdempotentSet seed;
  seed.elems.push_back(algebra_one(a));
  return make_split_algebra(std::move(a), std::move(seed));
}

SplitPtr make_split_algebra(AlgebraPtr a, IdempotentSet seed) {
  auto ctx = std::make_shared<SplitAlgebra>();
  ctx->A = a;
  ctx->rad = radical(*a);
  ctx->bar = quotient_algebra(*a, ctx->rad);

  // Orthogonality/completeness of the seed must already hold.
  {
    Vec sum = zero_vec(a->field(), a->dim());
    for (const auto& e : seed.elems) {
      if (!e.is_idempotent()) throw NotIdempotent();
      sum = vec_add(sum, e.coords);
    }
    if (sum != a->one()) throw ValidationError("seed idempotents do not sum to 1");
  }

  // Refine until every idempotent is primitive.
  std::vector<AlgebraElement> es = seed.elems;
  size_t guard = 0;
  for (size_t i = 0; i < es.size();) {
    if (++guard > 4 * a->dim() + 8) throw Error("idempotent refinement did not terminate");
    Vec ebar = ctx->bar.projection.apply(es[i].coords);
    CornerAlgebra cbar = corner_algebra(ctx->bar.alg, algebra_element(ctx->bar.alg, ebar));
    if (cbar.alg->dim() == 1) {
      ++i;
      continue;
    }
    auto fbar_local = detail::proper_idempotent(*cbar.alg);
    if (!fbar_local)
      throw NotSplit("corner of the semisimple quotient has dimension " +
                     std::to_string(cbar.alg->dim()));
    // Ambient representative inside e A e, then Newton lifting along the
    // radical: x <- 3x^2 - 2x^3 squares the error term.
    Vec fbar = cbar.embed.apply(*fbar_local);       // in Abar coordinates
    Vec x = ctx->bar.section.apply(fbar);           // some preimage in A
    x = a->multiply(es[i].coords, a->multiply(x, es[i].coords));
    const Scalar two = Scalar::of(a->field(), 2);
    const Scalar three = Scalar::of(a->field(), 3);
    for (size_t it = 0; it < 64; ++it) {
      Vec x2 = a->multiply(x, x);
      if (x2 == x) break;
      Vec x3 = a->multiply(x2, x);
      x = vec_sub(vec_scale(three, x2), vec_scale(two, x3));
    }
    if (a->multiply(x, x) != x) throw Error("idempotent lifting failed to converge");
    AlgebraElement f{a, x};
    AlgebraElement rest = es[i] - f;
    es[i] = f;
    es.insert(es.begin() + i + 1, rest);
  }

  ctx->E.elems = es;
  IdemValidation v = validate_idempotent_set(a, ctx->E);
  if (v.failure == IdemValidation::Failure::NotSplit) throw NotSplit(v.describe());
  if (!v.ok()) throw ValidationError("idempotent refinement produced an invalid set: " + v.describe());

  // Isomorphism classes: ebar_i Abar ebar_j != 0.
  const size_t n = es.size();
  ctx->iso_class.assign(n, SIZE_MAX);
  for (size_t i = 0; i < n; ++i) {
    if (ctx->iso_class[i] != SIZE_MAX) continue;
    size_t c = ctx->class_rep.size();
    ctx->class_rep.push_back(i);
    ctx->iso_class[i] = c;
    Vec ei = ctx->bar.projection.apply(es[i].coords);
    Matrix li = ctx->bar.alg->left_mult(ei);
    for (size_t j = i + 1; j < n; ++j) {
      if (ctx->iso_class[j] != SIZE_MAX) continue;
      Vec ej = ctx->bar.projection.apply(es[j].coords);
      Matrix m = li * ctx->bar.alg->right_mult(ej);
      if (m.rank() > 0) ctx->iso_class[j] = c;
    }
  }
  return ctx;
}

}  // namespace xprod
