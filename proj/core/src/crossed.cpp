#include "xprod/crossed.hpp"

#include "xprod/errors.hpp"

namespace xprod {

CrossedProduct CrossedProduct::build(const ParameterSet& input) {
  PSValidation v = validate_parameter_set(input);
  if (!v.ok()) throw ValidationError(v.describe());
  ParameterSet ps = normalize_convention(input);

  const FDAlgebra& a = *ps.A;
  const FiniteGroup& g = *ps.G;
  const size_t d = a.dim(), n = g.order(), dim = d * n;
  const Field& f = a.field();

  std::vector<FDAlgebra::Quad> quads;
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) {
      uint32_t xy = g.mul(x, y);
      for (uint32_t i = 0; i < d; ++i) {
        Vec bi = unit_vec(f, d, i);
        for (uint32_t j = 0; j < d; ++j) {
          // (b_i sigma_x)(b_j sigma_y) = b_i sigma_x(b_j) alpha(x,y) sigma_xy
          Vec prod = a.multiply(bi, a.multiply(ps.sigma[x].col(j), ps.alpha[x][y]));
          for (uint32_t k = 0; k < d; ++k)
            if (!prod[k].is_zero())
              quads.push_back({uint32_t(x * d + i), uint32_t(y * d + j), uint32_t(xy * d + k), prod[k]});
        }
      }
    }
  Vec one = zero_vec(f, dim);
  for (uint32_t k = 0; k < d; ++k) one[g.identity() * d + k] = ps.A->one()[k];

  CrossedProduct cp;
  cp.cp_ = FDAlgebra::from_structure_constants(f, dim, quads, one);
  cp.ps_ = std::move(ps);
  return cp;
}

AlgebraElement CrossedProduct::sigma_elem(uint32_t x) const {
  Vec v = zero_vec(cp_->field(), cp_->dim());
  const Vec& one_a = ps_.A->one();
  for (size_t i = 0; i < one_a.size(); ++i) v[flat(i, x)] = one_a[i];
  return {cp_, v};
}

AlgebraElement CrossedProduct::embed_base(const Vec& a_coords) const {
  Vec v = zero_vec(cp_->field(), cp_->dim());
  for (size_t i = 0; i < a_coords.size(); ++i) v[flat(i, ps_.G->identity())] = a_coords[i];
  return {cp_, v};
}

Matrix CrossedProduct::base_embedding() const {
  Matrix m(cp_->field(), cp_->dim(), ps_.A->dim());
  for (size_t i = 0; i < ps_.A->dim(); ++i) m.at(flat(i, ps_.G->identity()), i) = Scalar::one(cp_->field());
  return m;
}

SubCrossed restrict_to_subgroup(const CrossedProduct& cp, const Subgroup& h) {
  RestrictedParams rp = restrict_params(cp.params(), h);
  SubCrossed out{CrossedProduct::build(rp.ps), Matrix(), h, rp.to_parent};
  const size_t d = cp.base()->dim();
  Matrix emb(cp.algebra()->field(), cp.algebra()->dim(), out.sub.algebra()->dim());
  for (uint32_t xl = 0; xl < rp.to_parent.size(); ++xl)
    for (size_t i = 0; i < d; ++i)
      emb.at(cp.flat(i, rp.to_parent[xl]), out.sub.flat(i, xl)) = Scalar::one(emb.field());
  out.embed = emb;
  return out;
}

LinearQuotient linear_quotient(const Subspace& s) {
  const Field& f = s.basis().field();
  const size_t d = s.ambient_dim();
  std::vector<bool> pivot_row(d, false);
  {
    RrefForm r = s.basis().transpose().rref();
    for (size_t p : r.pivots) pivot_row[p] = true;
  }
  std::vector<size_t> comp;
  for (size_t i = 0; i < d; ++i)
    if (!pivot_row[i]) comp.push_back(i);
  Matrix section(f, d, comp.size());
  for (size_t t = 0; t < comp.size(); ++t) section.at(comp[t], t) = Scalar::one(f);
  if (s.dim() == 0) return {section.transpose(), section};
  Matrix full = Matrix::hstack(s.basis(), section);
  Matrix inv = *full.inverse();
  return {inv.submatrix(s.dim(), 0, comp.size(), d), section};
}

TrivialRep trivial_representation(const CrossedProduct& cp) {
  const AlgebraPtr& r = cp.algebra();
  const Field& f = r->field();
  std::vector<Vec> gens;
  for (uint32_t x = 0; x < cp.group()->order(); ++x) {
    if (x == cp.group()->identity()) continue;
    gens.push_back(vec_sub(cp.sigma_elem(x).coords, r->one()));
  }
  // Left-multiplication closure until the dimension stabilizes.
  Subspace ideal = Subspace::from_spanning(Matrix::from_cols(f, r->dim(), gens));
  while (true) {
    std::vector<Vec> next;
    for (size_t t = 0; t < ideal.dim(); ++t) next.push_back(ideal.basis_vec(t));
    for (size_t i = 0; i < r->dim(); ++i)
      for (size_t t = 0; t < ideal.dim(); ++t)
        next.push_back(r->multiply(unit_vec(f, r->dim(), i), ideal.basis_vec(t)));
    Subspace grown = Subspace::from_spanning(Matrix::from_cols(f, r->dim(), next));
    if (grown.dim() == ideal.dim()) break;
    ideal = grown;
  }
  LinearQuotient q = linear_quotient(ideal);
  std::vector<Matrix> act;
  act.reserve(r->dim());
  for (size_t i = 0; i < r->dim(); ++i)
    act.push_back(q.proj * r->left_mult(unit_vec(f, r->dim(), i)) * q.section);
  return {ideal, q, FDModule(r, std::move(act))};
}

Subspace fixed_subalgebra(const FDAlgebra& a, const std::vector<Matrix>& sigma,
                          const Subgroup& h) {
  const Field& f = a.field();
  const size_t d = a.dim();
  Matrix sys(f, d * h.order(), d);
  size_t row = 0;
  for (uint32_t x : h.elems) {
    Matrix diff = sigma[x] - Matrix::identity(f, d);
    for (size_t r = 0; r < d; ++r, ++row)
      for (size_t c = 0; c < d; ++c) sys.at(row, c) = diff.at(r, c);
  }
  return Subspace::from_spanning(sys.nullspace_basis());
}

Subspace fixed_points(const CrossedProduct& cp, const FDModule& m, const Subgroup& h) {
  const Field& f = cp.algebra()->field();
  Matrix sys(f, m.dim() * h.order(), m.dim());
  size_t row = 0;
  for (uint32_t x : h.elems) {
    Matrix diff = m.act_element(cp.sigma_elem(x).coords) - Matrix::identity(f, m.dim());
    for (size_t r = 0; r < m.dim(); ++r, ++row)
      for (size_t c = 0; c < m.dim(); ++c) sys.at(row, c) = diff.at(r, c);
  }
  return Subspace::from_spanning(sys.nullspace_basis());
}

FixedAlgebra fixed_subalgebra_as_algebra(const AlgebraPtr& a, const std::vector<Matrix>& sigma,
                                         const Subgroup& h) {
  Subspace s = fixed_subalgebra(*a, sigma, h);
  const Matrix& b = s.basis();
  std::vector<FDAlgebra::Quad> quads;
  for (uint32_t i = 0; i < s.dim(); ++i)
    for (uint32_t j = 0; j < s.dim(); ++j) {
      Vec prod = a->multiply(b.col(i), b.col(j));
      auto c = b.solve(prod);
      if (!c) throw Error("fixed subspace is not multiplicatively closed");
      for (uint32_t k = 0; k < s.dim(); ++k)
        if (!(*c)[k].is_zero()) quads.push_back({i, j, k, (*c)[k]});
    }
  auto onec = b.solve(a->one());
  if (!onec) throw Error("fixed subspace does not contain the identity");
  return {FDAlgebra::from_structure_constants(a->field(), s.dim(), quads, *onec), b};
}

Matrix trace_matrix(const std::vector<Matrix>& sigma, const Subgroup& h) {
  Matrix t = sigma[h.elems[0]];
  for (size_t i = 1; i < h.elems.size(); ++i) t = t + sigma[h.elems[i]];
  return t;
}

Subspace trace_image(const FDAlgebra& a, const std::vector<Matrix>& sigma, const Subgroup& h) {
  (void)a;
  return Subspace::from_spanning(trace_matrix(sigma, h));
}

TraceProjectivity trivial_is_projective(const CrossedProduct& cp) {
  const ParameterSet& ps = cp.params();
  for (uint32_t x = 0; x < ps.G->order(); ++x)
    for (uint32_t y = 0; y < ps.G->order(); ++y)
      if (ps.alpha[x][y] != ps.A->one())
        return {TraceProjectivity::Status::NotApplicable, {}};
  Matrix t = trace_matrix(ps.sigma, full_subgroup(ps.G));
  auto a = t.solve(ps.A->one());
  if (a) return {TraceProjectivity::Status::Projective, *a};
  return {TraceProjectivity::Status::NotProjective, {}};
}

}  // namespace xprod
