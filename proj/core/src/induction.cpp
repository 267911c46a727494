#include "xprod/induction.hpp"

#include "xprod/errors.hpp"

namespace xprod {

FDModule restrict_module(const FDModule& m, const SubalgebraEmbed& emb) {
  if (m.algebra() != emb.R) throw MixedAlgebras();
  std::vector<Matrix> act;
  act.reserve(emb.S->dim());
  for (size_t s = 0; s < emb.S->dim(); ++s) act.push_back(m.act_element(emb.embed.col(s)));
  return FDModule(emb.S, std::move(act));
}

InducedModule induce_module(const FDModule& n, const SubalgebraEmbed& emb, size_t expected_dim) {
  if (n.algebra() != emb.S) throw MixedAlgebras();
  const AlgebraPtr& r = emb.R;
  const Field& f = r->field();
  const size_t dr = r->dim(), dn = n.dim();
  auto flat = [&](size_t a, size_t j) { return a * dn + j; };

  std::vector<Vec> gens;
  for (size_t s = 0; s < emb.S->dim(); ++s) {
    Matrix rs = r->right_mult(emb.embed.col(s));
    const Matrix& sv = n.act(s);
    for (size_t a = 0; a < dr; ++a) {
      Vec rs_a = rs.col(a);
      for (size_t j = 0; j < dn; ++j) {
        Vec g = zero_vec(f, dr * dn);
        for (size_t k = 0; k < dr; ++k)
          if (!rs_a[k].is_zero()) g[flat(k, j)] += rs_a[k];
        for (size_t k = 0; k < dn; ++k)
          if (!sv.at(k, j).is_zero()) g[flat(a, k)] -= sv.at(k, j);
        if (!vec_is_zero(g)) gens.push_back(g);
      }
    }
  }
  LinearQuotient q = linear_quotient(
      Subspace::from_spanning(Matrix::from_cols(f, dr * dn, gens)));
  if (expected_dim && q.dim() != expected_dim)
    throw Error("induced module has dimension " + std::to_string(q.dim()) + ", expected " +
                std::to_string(expected_dim));

  std::vector<Matrix> act;
  act.reserve(dr);
  for (size_t i = 0; i < dr; ++i) {
    Matrix lm = r->left_mult(unit_vec(f, dr, i));
    Matrix big(f, dr * dn, dr * dn);
    for (size_t a = 0; a < dr; ++a)
      for (size_t k = 0; k < dr; ++k) {
        if (lm.at(k, a).is_zero()) continue;
        for (size_t j = 0; j < dn; ++j) big.at(flat(k, j), flat(a, j)) = lm.at(k, a);
      }
    act.push_back(q.proj * big * q.section);
  }
  return {FDModule(r, std::move(act)), q};
}

Matrix degree_projection(const CrossedProduct& cp, const SubCrossed& sub) {
  const Field& f = cp.algebra()->field();
  Matrix pi(f, sub.sub.algebra()->dim(), cp.algebra()->dim());
  const size_t d = cp.base()->dim();
  for (uint32_t xl = 0; xl < sub.to_parent.size(); ++xl)
    for (size_t i = 0; i < d; ++i)
      pi.at(sub.sub.flat(i, xl), cp.flat(i, sub.to_parent[xl])) = Scalar::one(f);
  return pi;
}

SplitPair pi_delta_check(const FDModule& m_over_s, const SubalgebraEmbed& emb, const Matrix& pi_s) {
  const AlgebraPtr& r = emb.R;
  const Field& f = r->field();
  const size_t dr = r->dim(), dm = m_over_s.dim();
  InducedModule up = induce_module(m_over_s, emb);

  // delta: v -> 1 (x) v.
  Matrix delta(f, up.q.dim(), dm);
  for (size_t j = 0; j < dm; ++j) {
    Vec t = zero_vec(f, dr * dm);
    for (size_t a = 0; a < dr; ++a)
      if (!r->one()[a].is_zero()) t[a * dm + j] = r->one()[a];
    delta.set_col(j, up.q.proj.apply(t));
  }
  // pi_M: r (x) v -> pi(r) v on representatives.
  Matrix pim(f, dm, up.q.dim());
  for (size_t t = 0; t < up.q.dim(); ++t) {
    Vec rep = up.q.section.col(t);
    Vec out = zero_vec(f, dm);
    for (size_t a = 0; a < dr; ++a) {
      Vec slice = zero_vec(f, dm);
      bool any = false;
      for (size_t j = 0; j < dm; ++j)
        if (!rep[a * dm + j].is_zero()) {
          slice[j] = rep[a * dm + j];
          any = true;
        }
      if (!any) continue;
      Vec pr = pi_s.apply(unit_vec(f, dr, a));
      out = vec_add(out, m_over_s.act_element(pr).apply(slice));
    }
    pim.set_col(t, out);
  }
  SplitPair out{pim, delta, false};
  out.composite_is_identity = (pim * delta).is_identity();
  return out;
}

SplitPair phi_psi_check(const FDModule& n_over_r, const SubalgebraEmbed& emb,
                        const SeparabilityElement& zeta) {
  const AlgebraPtr& r = emb.R;
  const Field& f = r->field();
  const size_t dr = r->dim(), dn = n_over_r.dim();
  FDModule restricted = restrict_module(n_over_r, emb);
  InducedModule up = induce_module(restricted, emb);

  // phi: v -> sum over the lift entries a (x) (b v).
  Matrix phi(f, up.q.dim(), dn);
  for (size_t j = 0; j < dn; ++j) {
    Vec t = zero_vec(f, dr * dn);
    for (size_t a = 0; a < dr; ++a)
      for (size_t b = 0; b < dr; ++b) {
        const Scalar& c = zeta.lift[a * dr + b];
        if (c.is_zero()) continue;
        Vec bv = n_over_r.act(b).col(j);
        for (size_t k = 0; k < dn; ++k)
          if (!bv[k].is_zero()) t[a * dn + k] += c * bv[k];
      }
    phi.set_col(j, up.q.proj.apply(t));
  }
  // psi: r (x) v -> r v on representatives.
  Matrix psi(f, dn, up.q.dim());
  for (size_t t = 0; t < up.q.dim(); ++t) {
    Vec rep = up.q.section.col(t);
    Vec out = zero_vec(f, dn);
    for (size_t a = 0; a < dr; ++a) {
      Vec slice = zero_vec(f, dn);
      bool any = false;
      for (size_t j = 0; j < dn; ++j)
        if (!rep[a * dn + j].is_zero()) {
          slice[j] = rep[a * dn + j];
          any = true;
        }
      if (any) out = vec_add(out, n_over_r.act(a).apply(slice));
    }
    psi.set_col(t, out);
  }
  SplitPair out{psi, phi, false};
  out.composite_is_identity = (psi * phi).is_identity();
  return out;
}

SpotCheck theorem_4_3_spotcheck(const SplitAlgebra& top, const SplitAlgebra& bottom,
                                const SubalgebraEmbed& emb, const FDModule& m, size_t cutoff,
                                const IsoOptions& iso) {
  SpotCheck out;
  out.pd_top = pd_report(top, m, cutoff, iso).status;
  out.pd_bottom = pd_report(bottom, restrict_module(m, emb), cutoff, iso).status;
  out.monotone = true;
  if (out.pd_top.kind == DimStatus::Kind::Finite && out.pd_bottom.kind == DimStatus::Kind::Finite)
    out.monotone = out.pd_bottom.value <= out.pd_top.value;
  else if (out.pd_top.kind == DimStatus::Kind::Finite &&
           out.pd_bottom.kind == DimStatus::Kind::Infinite)
    out.monotone = false;  // restriction cannot exceed the top dimension
  out.equal_when_finite = true;
  if (out.pd_top.kind == DimStatus::Kind::Finite) {
    out.equal_when_finite = out.pd_bottom.kind == DimStatus::Kind::Finite &&
                            out.pd_bottom.value == out.pd_top.value;
  }
  return out;
}

FdimProbe fdim_probe(const SplitAlgebra& s, const std::vector<FDModule>& family, size_t cutoff,
                     const IsoOptions& iso) {
  FdimProbe out;
  for (const FDModule& m : family) {
    DimStatus st = pd_report(s, m, cutoff, iso).status;
    if (st.kind == DimStatus::Kind::Finite) {
      ++out.finite_count;
      out.lower_bound = std::max(out.lower_bound, st.value);
    } else if (st.kind == DimStatus::Kind::Undetermined) {
      ++out.undetermined;
    }
  }
  return out;
}

EckmannShapiro eckmann_shapiro_check(const SplitAlgebra& top, const SplitAlgebra& bottom,
                                     const SubalgebraEmbed& emb, const FDModule& m_over_r,
                                     const FDModule& n_over_s) {
  EckmannShapiro out;
  FDModule m_down = restrict_module(m_over_r, emb);
  out.lhs = ext1_dim_modules(bottom, m_down, n_over_s);
  size_t expected = 0;  // R free over S of rank |G:H| is not assumed here
  InducedModule up = induce_module(n_over_s, emb, expected);
  out.rhs = ext1_dim_modules(top, m_over_r, up.mod);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace xprod
