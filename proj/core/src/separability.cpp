#include "xprod/separability.hpp"

#include "xprod/errors.hpp"

namespace xprod {

SubalgebraEmbed make_subalgebra_embed(AlgebraPtr r, AlgebraPtr s, Matrix embed) {
  if (embed.rows() != r->dim() || embed.cols() != s->dim())
    throw ShapeMismatch("subalgebra embedding matrix");
  if (embed.apply(s->one()) != r->one()) throw ValidationError("embedding does not preserve 1");
  for (size_t i = 0; i < s->dim(); ++i)
    for (size_t j = 0; j < s->dim(); ++j) {
      Vec prod = s->multiply(unit_vec(s->field(), s->dim(), i), unit_vec(s->field(), s->dim(), j));
      if (embed.apply(prod) != r->multiply(embed.col(i), embed.col(j)))
        throw ValidationError("embedding is not an algebra map");
    }
  return {std::move(r), std::move(s), std::move(embed)};
}

SubalgebraEmbed base_embed(const CrossedProduct& cp) {
  return make_subalgebra_embed(cp.algebra(), cp.base(), cp.base_embedding());
}

SubalgebraEmbed subgroup_embed(const CrossedProduct& cp, const SubCrossed& sub) {
  return make_subalgebra_embed(cp.algebra(), sub.sub.algebra(), sub.embed);
}

TensorSquare::TensorSquare(const SubalgebraEmbed& emb) : emb_(emb) {
  const AlgebraPtr& r = emb.R;
  const Field& f = r->field();
  const size_t d = r->dim();
  auto flat = [&](size_t a, size_t b) { return a * d + b; };

  // Balancing subspace: (r s) (x) r' - r (x) (s r').
  std::vector<Vec> gens;
  gens.reserve(d * d * emb.S->dim());
  for (size_t s = 0; s < emb.S->dim(); ++s) {
    Vec se = emb.embed.col(s);
    Matrix rs = r->right_mult(se);  // x -> x * se
    Matrix sr = r->left_mult(se);   // x -> se * x
    for (size_t a = 0; a < d; ++a) {
      Vec rs_a = rs.col(a);
      for (size_t b = 0; b < d; ++b) {
        Vec g = zero_vec(f, d * d);
        for (size_t k = 0; k < d; ++k)
          if (!rs_a[k].is_zero()) g[flat(k, b)] += rs_a[k];
        Vec sr_b = sr.col(b);
        for (size_t k = 0; k < d; ++k)
          if (!sr_b[k].is_zero()) g[flat(a, k)] -= sr_b[k];
        if (!vec_is_zero(g)) gens.push_back(g);
      }
    }
  }
  Subspace bal = Subspace::from_spanning(Matrix::from_cols(f, d * d, gens));
  q_ = linear_quotient(bal);

  mult_ = Matrix(f, d, q_.dim());
  for (size_t t = 0; t < q_.dim(); ++t) {
    Vec rep = q_.section.col(t);
    Vec out = zero_vec(f, d);
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b)
        if (!rep[flat(a, b)].is_zero())
          out = vec_add(out, vec_scale(rep[flat(a, b)],
                                       r->multiply(unit_vec(f, d, a), unit_vec(f, d, b))));
    mult_.set_col(t, out);
  }
}

Vec TensorSquare::simple_tensor(const Vec& a, const Vec& b) const {
  const size_t d = emb_.R->dim();
  Vec flat = zero_vec(emb_.R->field(), d * d);
  for (size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j)
      if (!b[j].is_zero()) flat[i * d + j] += a[i] * b[j];
  }
  return q_.proj.apply(flat);
}

Matrix TensorSquare::left_action(size_t basis_i) const {
  const AlgebraPtr& r = emb_.R;
  const size_t d = r->dim();
  Matrix lm = r->left_mult(unit_vec(r->field(), d, basis_i));
  Matrix big(r->field(), d * d, d * d);
  for (size_t a = 0; a < d; ++a)
    for (size_t k = 0; k < d; ++k) {
      if (lm.at(k, a).is_zero()) continue;
      for (size_t b = 0; b < d; ++b) big.at(k * d + b, a * d + b) = lm.at(k, a);
    }
  return q_.proj * big * q_.section;
}

Matrix TensorSquare::right_action(size_t basis_i) const {
  const AlgebraPtr& r = emb_.R;
  const size_t d = r->dim();
  Matrix rm = r->right_mult(unit_vec(r->field(), d, basis_i));
  Matrix big(r->field(), d * d, d * d);
  for (size_t b = 0; b < d; ++b)
    for (size_t k = 0; k < d; ++k) {
      if (rm.at(k, b).is_zero()) continue;
      for (size_t a = 0; a < d; ++a) big.at(a * d + k, a * d + b) = rm.at(k, b);
    }
  return q_.proj * big * q_.section;
}

SeparabilityCheck check_separability_element(const TensorSquare& ts,
                                             const SeparabilityElement& z) {
  SeparabilityCheck out;
  out.commutes = true;
  const AlgebraPtr& r = ts.embedding().R;
  for (size_t i = 0; i < r->dim(); ++i) {
    if (ts.left_action(i).apply(z.coords) != ts.right_action(i).apply(z.coords)) {
      out.commutes = false;
      out.witness_r = i;
      break;
    }
  }
  out.multiplies_to_one = ts.mult_map().apply(z.coords) == r->one();
  return out;
}

namespace {

SeparabilityElement zeta_from_reps(const CrossedProduct& cp, const std::vector<uint32_t>& reps,
                                   const TensorSquare& ts, bool invert_alpha) {
  const AlgebraPtr& r = cp.algebra();
  const Field& f = r->field();
  const size_t d = r->dim();
  Scalar idx = Scalar::of(f, int64_t(reps.size()));
  if (idx.is_zero()) throw IndexNotInvertible();
  Scalar c = idx.inverse();

  Vec lift = zero_vec(f, d * d);
  const FiniteGroup& g = *cp.group();
  for (uint32_t x : reps) {
    uint32_t xm = g.inv(x);
    AlgebraElement axxm{cp.params().A, cp.params().alpha[x][xm]};
    Vec coeff = invert_alpha ? (*axxm.try_inverse()).coords : axxm.coords;
    Vec left = r->multiply(cp.embed_base(coeff).coords, cp.sigma_elem(x).coords);
    Vec right = cp.sigma_elem(xm).coords;
    for (size_t a = 0; a < d; ++a) {
      if (left[a].is_zero()) continue;
      for (size_t b = 0; b < d; ++b)
        if (!right[b].is_zero()) lift[a * d + b] += c * left[a] * right[b];
    }
  }
  SeparabilityElement z;
  z.lift = lift;
  z.coords = ts.project(lift);
  return z;
}

}  // namespace

std::pair<SeparabilityElement, SeparabilityElement> canonical_zeta_variants(
    const CrossedProduct& cp, const SubCrossed& sub, const TensorSquare& ts) {
  std::vector<uint32_t> reps = left_cosets(*cp.group(), sub.h);
  return {zeta_from_reps(cp, reps, ts, true), zeta_from_reps(cp, reps, ts, false)};
}

CanonicalZeta canonical_separability_element(const CrossedProduct& cp, const SubCrossed& sub,
                                             const TensorSquare& ts) {
  const FiniteGroup& g = *cp.group();
  std::vector<uint32_t> reps = left_cosets(g, sub.h);
  CanonicalZeta out;
  out.zeta = zeta_from_reps(cp, reps, ts, true);

  // Independence of the representative choice: replace each least-index
  // representative by the largest element of its coset.
  std::vector<uint32_t> other;
  for (uint32_t x : reps) {
    uint32_t best = x;
    for (uint32_t s : sub.h.elems) best = std::max(best, g.mul(x, s));
    other.push_back(best);
  }
  SeparabilityElement z2 = zeta_from_reps(cp, other, ts, true);
  out.representative_independent = z2.coords == out.zeta.coords;
  return out;
}

std::optional<SeparabilityElement> find_separability_element(const TensorSquare& ts) {
  const AlgebraPtr& r = ts.embedding().R;
  const Field& f = r->field();
  const size_t q = ts.dim(), d = r->dim();
  // Stack the commuting conditions and the multiplication condition.
  Matrix sys(f, d * q + d, q);
  Vec rhs = zero_vec(f, d * q + d);
  size_t row = 0;
  for (size_t i = 0; i < d; ++i) {
    Matrix diff = ts.left_action(i) - ts.right_action(i);
    for (size_t rr = 0; rr < q; ++rr, ++row)
      for (size_t cc = 0; cc < q; ++cc) sys.at(row, cc) = diff.at(rr, cc);
  }
  const Matrix& mu = ts.mult_map();
  for (size_t rr = 0; rr < d; ++rr, ++row) {
    for (size_t cc = 0; cc < q; ++cc) sys.at(row, cc) = mu.at(rr, cc);
    rhs[row] = r->one()[rr];
  }
  auto sol = sys.solve(rhs);
  if (!sol) return std::nullopt;
  SeparabilityElement z;
  z.coords = *sol;
  z.lift = ts.quotient().section.apply(*sol);
  return z;
}

CentralTraceCriterion central_trace_criterion(const CrossedProduct& cp) {
  CentralTraceCriterion out;
  const ParameterSet& ps = cp.params();
  for (uint32_t x = 0; x < ps.G->order(); ++x)
    for (uint32_t y = 0; y < ps.G->order(); ++y)
      if (ps.alpha[x][y] != ps.A->one()) return out;  // twisted: not applicable
  out.applicable = true;
  Subspace ctr = center(*ps.A);
  Matrix tr = trace_matrix(ps.sigma, full_subgroup(ps.G));
  Matrix traced = tr * ctr.basis();
  out.center_trace_image_dim = Subspace::from_spanning(traced).dim();
  auto sol = traced.solve(ps.A->one());
  if (sol) {
    out.separable = true;
    out.witness = ctr.basis().apply(*sol);
  }
  return out;
}

}  // namespace xprod
