#include "xprod/params.hpp"

#include "xprod/errors.hpp"

namespace xprod {

ParameterSet ParameterSet::group_algebra(AlgebraPtr a, GroupPtr g) {
  ParameterSet ps;
  ps.sigma.assign(g->order(), Matrix::identity(a->field(), a->dim()));
  ps.alpha.assign(g->order(), std::vector<Vec>(g->order(), a->one()));
  ps.A = std::move(a);
  ps.G = std::move(g);
  return ps;
}

ParameterSet ParameterSet::skew(AlgebraPtr a, GroupPtr g, std::vector<Matrix> sigma) {
  ParameterSet ps = group_algebra(a, g);
  if (sigma.size() != ps.G->order()) throw ShapeMismatch("sigma table size");
  ps.sigma = std::move(sigma);
  return ps;
}

std::string PSValidation::describe() const {
  switch (failure) {
    case Failure::None:
      return "valid parameter set";
    case Failure::NotAutomorphism:
      return "sigma_" + std::to_string(x) + " is not an algebra automorphism";
    case Failure::NotUnit:
      return "alpha(" + std::to_string(x) + "," + std::to_string(y) + ") is not a unit";
    case Failure::Condition1:
      return "condition (1) fails at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Failure::Condition2:
      return "condition (2) fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
             std::to_string(z) + ")";
  }
  return "?";
}

namespace {

// Matrix of the inner automorphism iota_u composed after m: a -> u m(a) u^-1.
Matrix inner_after(const FDAlgebra& a, const Vec& u, const Vec& uinv, const Matrix& m) {
  return a.left_mult(u) * a.right_mult(uinv) * m;
}

}  // namespace

PSValidation validate_parameter_set(const ParameterSet& ps) {
  PSValidation out;
  const FDAlgebra& a = *ps.A;
  const FiniteGroup& g = *ps.G;
  const size_t n = g.order();
  if (ps.sigma.size() != n || ps.alpha.size() != n) throw ShapeMismatch("parameter set tables");

  for (uint32_t x = 0; x < n; ++x)
    if (!is_algebra_automorphism(a, ps.sigma[x])) {
      out.failure = PSValidation::Failure::NotAutomorphism;
      out.x = x;
      return out;
    }
  std::vector<std::vector<Vec>> alpha_inv(n, std::vector<Vec>(n));
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) {
      if (ps.alpha[x].size() != n) throw ShapeMismatch("alpha table row");
      auto inv = ps.alp(x, y).try_inverse();
      if (!inv) {
        out.failure = PSValidation::Failure::NotUnit;
        out.x = x;
        out.y = y;
        return out;
      }
      alpha_inv[x][y] = inv->coords;
    }

  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) {
      Matrix lhs = ps.sigma[x] * ps.sigma[y];
      Matrix rhs = inner_after(a, ps.alpha[x][y], alpha_inv[x][y], ps.sigma[g.mul(x, y)]);
      if (!(lhs == rhs)) {
        out.failure = PSValidation::Failure::Condition1;
        out.x = x;
        out.y = y;
        return out;
      }
    }

  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y)
      for (uint32_t z = 0; z < n; ++z) {
        Vec lhs = a.multiply(ps.alpha[x][y], ps.alpha[g.mul(x, y)][z]);
        Vec rhs = a.multiply(ps.sigma[x].apply(ps.alpha[y][z]), ps.alpha[x][g.mul(y, z)]);
        if (lhs != rhs) {
          out.failure = PSValidation::Failure::Condition2;
          out.x = x;
          out.y = y;
          out.z = z;
          return out;
        }
      }
  return out;
}

bool is_convention_normalized(const ParameterSet& ps) {
  const uint32_t e = ps.G->identity();
  for (uint32_t x = 0; x < ps.G->order(); ++x)
    if (ps.alpha[e][x] != ps.A->one() || ps.alpha[x][e] != ps.A->one()) return false;
  return ps.sigma[e].is_identity();
}

ParameterSet normalize_convention(const ParameterSet& ps) {
  if (is_convention_normalized(ps)) return ps;
  const uint32_t e = ps.G->identity();
  AlgebraElement c{ps.A, ps.alpha[e][e]};
  auto cinv = c.try_inverse();
  if (!cinv) throw NotUnitError(e, e);
  std::vector<AlgebraElement> units;
  for (uint32_t x = 0; x < ps.G->order(); ++x)
    units.push_back({ps.A, ps.sigma[x].apply(cinv->coords)});
  return apply_equivalence(ps, units);
}

ParameterSet apply_equivalence(const ParameterSet& ps, const std::vector<AlgebraElement>& units) {
  const FDAlgebra& a = *ps.A;
  const FiniteGroup& g = *ps.G;
  const size_t n = g.order();
  if (units.size() != n) throw ShapeMismatch("one unit per group element required");
  std::vector<Vec> u(n), uinv(n);
  for (uint32_t x = 0; x < n; ++x) {
    if (units[x].alg != ps.A) throw MixedAlgebras();
    auto inv = units[x].try_inverse();
    if (!inv) throw NotUnitError(x, x);
    u[x] = units[x].coords;
    uinv[x] = inv->coords;
  }
  ParameterSet out;
  out.A = ps.A;
  out.G = ps.G;
  out.sigma.reserve(n);
  for (uint32_t x = 0; x < n; ++x)
    out.sigma.push_back(ps.sigma[x] * (a.left_mult(u[x]) * a.right_mult(uinv[x])));
  out.alpha.assign(n, std::vector<Vec>(n));
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) {
      Vec v = a.multiply(u[x], ps.sigma[x].apply(u[y]));
      v = a.multiply(v, ps.alpha[x][y]);
      out.alpha[x][y] = a.multiply(v, uinv[g.mul(x, y)]);
    }
  return out;
}

RestrictedParams restrict_params(const ParameterSet& ps, const Subgroup& h) {
  SubgroupGroup sg = subgroup_as_group(h);
  RestrictedParams out;
  out.to_parent = sg.to_parent;
  out.ps.A = ps.A;
  out.ps.G = sg.group;
  const size_t m = sg.to_parent.size();
  out.ps.sigma.reserve(m);
  for (uint32_t i = 0; i < m; ++i) out.ps.sigma.push_back(ps.sigma[sg.to_parent[i]]);
  out.ps.alpha.assign(m, std::vector<Vec>(m));
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      out.ps.alpha[i][j] = ps.alpha[sg.to_parent[i]][sg.to_parent[j]];
  return out;
}

IdentityReport cocycle_identities_check(const ParameterSet& ps, const Subgroup& h) {
  const FDAlgebra& a = *ps.A;
  const FiniteGroup& g = *ps.G;
  IdentityReport rep;

  auto alpha_inv = [&](uint32_t x, uint32_t y) {
    auto inv = ps.alp(x, y).try_inverse();
    if (!inv) throw NotUnitError(x, y);
    return inv->coords;
  };

  // (5.1) needs the products h_x, well defined only for central alpha values.
  Subspace ctr = center(a);
  rep.five_one_applicable = true;
  for (uint32_t x : h.elems)
    for (uint32_t y : h.elems)
      if (!ctr.contains(ps.alpha[x][y])) rep.five_one_applicable = false;

  std::vector<Vec> hvec;
  if (rep.five_one_applicable) {
    for (uint32_t x : h.elems) {
      Vec acc = a.one();
      for (uint32_t y : h.elems) acc = a.multiply(acc, ps.alpha[x][y]);
      hvec.push_back(acc);
    }
  }

  auto record = [&](int id, uint32_t x, uint32_t y, bool okay) {
    if (okay) return;
    ++rep.violations[id];
    if (rep.witness_identity < 0) {
      rep.witness_identity = id;
      rep.witness_x = x;
      rep.witness_y = y;
    }
  };

  std::vector<size_t> local_of(g.order(), SIZE_MAX);
  for (size_t i = 0; i < h.elems.size(); ++i) local_of[h.elems[i]] = i;

  for (uint32_t x : h.elems) {
    for (uint32_t y : h.elems) {
      ++rep.pairs_checked;
      uint32_t xm = g.inv(x), ym = g.inv(y);
      uint32_t xy = g.mul(x, y), yx = g.mul(y, x);

      // (3.1) alpha(x,x-)^{-1} sigma_x(alpha(x-,y-)) alpha(y-,yx)^{-1}
      //        = sigma_{y-}(alpha(yx, x-y-))^{-1}
      {
        Vec lhs = a.multiply(alpha_inv(x, xm), ps.sigma[x].apply(ps.alpha[xm][ym]));
        lhs = a.multiply(lhs, alpha_inv(ym, yx));
        Vec rhs = ps.sigma[ym].apply(ps.alpha[yx][g.mul(xm, ym)]);
        auto rinv = AlgebraElement{ps.A, rhs}.try_inverse();
        record(0, x, y, rinv && lhs == rinv->coords);
      }
      // (3.2) alpha(xy,y-x-)^{-1} sigma_{xy}(alpha(y-,x-))^{-1} alpha(xy,y-)
      //        = alpha(x,x-)^{-1}
      {
        Vec s = ps.sigma[xy].apply(ps.alpha[ym][xm]);
        auto sinv = AlgebraElement{ps.A, s}.try_inverse();
        bool okay = false;
        if (sinv) {
          Vec lhs = a.multiply(alpha_inv(xy, g.mul(ym, xm)), sinv->coords);
          lhs = a.multiply(lhs, ps.alpha[xy][ym]);
          okay = lhs == alpha_inv(x, xm);
        }
        record(1, x, y, okay);
      }
      // (3.3) alpha(y-,yx) alpha(x,x-y-) = sigma_{y-}(alpha(yx, x-y-))
      {
        Vec lhs = a.multiply(ps.alpha[ym][yx], ps.alpha[x][g.mul(xm, ym)]);
        Vec rhs = ps.sigma[ym].apply(ps.alpha[yx][g.mul(xm, ym)]);
        record(2, x, y, lhs == rhs);
      }
      // (3.4) sigma_{xy}(alpha(y-,x-)) alpha(xy,y-x-) = alpha(xy,y-) alpha(x,x-)
      {
        Vec lhs = a.multiply(ps.sigma[xy].apply(ps.alpha[ym][xm]), ps.alpha[xy][g.mul(ym, xm)]);
        Vec rhs = a.multiply(ps.alpha[xy][ym], ps.alpha[x][xm]);
        record(3, x, y, lhs == rhs);
      }
      // (5.1) alpha(x,y)^{|S|} h_{xy} = sigma_x(h_y) h_x
      if (rep.five_one_applicable && local_of[xy] != SIZE_MAX) {
        Vec pw = a.one();
        for (size_t t = 0; t < h.elems.size(); ++t) pw = a.multiply(pw, ps.alpha[x][y]);
        Vec lhs = a.multiply(pw, hvec[local_of[xy]]);
        Vec rhs = a.multiply(ps.sigma[x].apply(hvec[local_of[y]]), hvec[local_of[x]]);
        record(4, x, y, lhs == rhs);
      }
    }
  }
  return rep;
}

NormalizationData normalize_to_skew(const ParameterSet& ps_on_s) {
  const FDAlgebra& a = *ps_on_s.A;
  const FiniteGroup& s = *ps_on_s.G;
  const Field& f = a.field();
  if (f.is_rational()) throw NotApplicableError("normalization needs a finite ground field");
  // |S| must be a power of the characteristic.
  {
    size_t n = s.order();
    while (n % f.p == 0) n /= f.p;
    if (n != 1) throw NotApplicableError("group order is not a power of the characteristic");
  }
  uint32_t m = 0;
  for (size_t n = s.order(); n > 1; n /= f.p) ++m;

  // alpha must be scalar-valued.
  std::vector<std::vector<Scalar>> asc(s.order(), std::vector<Scalar>(s.order(), Scalar::zero(f)));
  for (uint32_t x = 0; x < s.order(); ++x)
    for (uint32_t y = 0; y < s.order(); ++y) {
      const Vec& v = ps_on_s.alpha[x][y];
      Scalar c = Scalar::zero(f);
      bool found = false;
      for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (a.one()[k].is_zero()) throw AlphaNotScalar(x, y);
        if (!found) {
          c = v[k] / a.one()[k];
          found = true;
        }
      }
      if (vec_scale(c, a.one()) != v) throw AlphaNotScalar(x, y);
      asc[x][y] = c;
    }

  // Identity (5.1) must hold before extraction; scalars make it symmetric.
  {
    IdentityReport rep = cocycle_identities_check(ps_on_s, full_subgroup(ps_on_s.G));
    if (!rep.five_one_applicable || rep.violations[4] != 0)
      throw ValidationError("identity (5.1) fails; parameter set is not valid over the subgroup");
  }

  NormalizationData out;
  std::vector<AlgebraElement> wunits;
  for (uint32_t x = 0; x < s.order(); ++x) {
    Scalar hx = Scalar::one(f);
    for (uint32_t y = 0; y < s.order(); ++y) hx = hx * asc[x][y];
    // Unique |S|-th root: X^{p^m} = h has the single solution h^{p^{-m}}.
    Scalar ux = hx.inverse_frobenius(m);
    if (ux.pow(int64_t(s.order())) != hx) throw Error("internal: root extraction failed");
    out.h.push_back(scalar_element(ps_on_s.A, hx));
    out.u.push_back(scalar_element(ps_on_s.A, ux));
    // sigma fixes scalars; verified here because Lemma 5.8(2) demands it.
    for (uint32_t y = 0; y < s.order(); ++y)
      if (ps_on_s.sigma[y].apply(out.u.back().coords) != out.u.back().coords)
        throw Error("internal: scalar unit moved by sigma");
    auto inv = out.u.back().try_inverse();
    if (!inv) throw Error("internal: root is not a unit");
    wunits.push_back(*inv);
  }
  out.result = apply_equivalence(ps_on_s, wunits);
  for (uint32_t x = 0; x < s.order(); ++x)
    for (uint32_t y = 0; y < s.order(); ++y)
      if (out.result.alpha[x][y] != a.one())
        throw Error("internal: normalization left a nontrivial alpha at (" + std::to_string(x) +
                    "," + std::to_string(y) + ")");
  return out;
}

}  // namespace xprod
