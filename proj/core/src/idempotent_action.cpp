#include "xprod/idempotent_action.hpp"

#include "xprod/errors.hpp"

namespace xprod {

IdemAction action_on_idempotents(const ParameterSet& ps, const IdempotentSet& e) {
  IdemAction act;
  const size_t n = ps.G->order();
  act.perm.assign(n, std::vector<size_t>(e.size(), SIZE_MAX));
  for (uint32_t x = 0; x < n; ++x)
    for (size_t i = 0; i < e.size(); ++i) {
      Vec img = ps.sigma[x].apply(e.elems[i].coords);
      for (size_t j = 0; j < e.size(); ++j)
        if (img == e.elems[j].coords) {
          act.perm[x][i] = j;
          break;
        }
      if (act.perm[x][i] == SIZE_MAX) throw NotClosed(x, i);
    }
  return act;
}

FreeActionReport free_action_check(const ParameterSet& ps, const IdemAction& act) {
  FreeActionReport out;
  out.free = true;
  for (uint32_t x = 0; x < ps.G->order(); ++x) {
    if (x == ps.G->identity()) continue;
    for (size_t i = 0; i < act.perm[x].size(); ++i)
      if (act.perm[x][i] == i) {
        out.free = false;
        out.fixed_pairs.emplace_back(x, i);
      }
  }
  return out;
}

bool faithful_action_check(const ParameterSet& ps) {
  for (uint32_t x = 0; x < ps.G->order(); ++x) {
    if (x == ps.G->identity()) continue;
    if (ps.sigma[x].is_identity()) return false;
  }
  return true;
}

OrbitEpsilon orbit_epsilon(const ParameterSet& ps, const IdempotentSet& e, const IdemAction& act) {
  OrbitEpsilon out;
  const size_t n = e.size();
  out.orbit_of.assign(n, SIZE_MAX);
  for (size_t i = 0; i < n; ++i) {
    if (out.orbit_of[i] != SIZE_MAX) continue;
    size_t orbit = out.reps.size();
    out.reps.push_back(i);
    for (uint32_t x = 0; x < ps.G->order(); ++x) out.orbit_of[act.perm[x][i]] = orbit;
  }
  Vec sum = zero_vec(ps.A->field(), ps.A->dim());
  for (size_t r : out.reps) sum = vec_add(sum, e.elems[r].coords);
  out.epsilon = AlgebraElement{ps.A, sum};
  if (!out.epsilon.is_idempotent()) throw Error("orbit representative sum is not idempotent");
  return out;
}

OrbitIso orbit_idempotent_isomorphism(const CrossedProduct& cp, const AlgebraElement& e,
                                      uint32_t x) {
  if (e.alg != cp.base()) throw MixedAlgebras();
  if (!e.is_idempotent()) throw NotIdempotent();
  const ParameterSet& ps = cp.params();
  const AlgebraPtr& r = cp.algebra();
  uint32_t xm = ps.G->inv(x);

  OrbitIso out;
  Vec sxe = ps.sigma[x].apply(e.coords);
  out.mu = cp.embed_base(sxe) * cp.sigma_elem(x);
  AlgebraElement axmx{ps.A, ps.alpha[xm][x]};
  out.nu = cp.embed_base((*axmx.try_inverse()).coords) * cp.sigma_elem(xm);

  AlgebraElement f_cp = cp.embed_base(sxe);
  AlgebraElement e_cp = cp.embed_base(e.coords);
  bool munu = (out.mu * out.nu) == f_cp;
  bool numu = (out.nu * out.mu) == e_cp;

  // a = e nu f, b = f mu e give the two-sided certificate ab = e, ba = f.
  out.a = e_cp * out.nu * f_cp;
  out.b = f_cp * out.mu * e_cp;
  bool ab = (out.a * out.b) == e_cp;
  bool ba = (out.b * out.a) == f_cp;

  // Module isomorphism CP e -> CP f: right multiplication by a is invertible
  // between the corner columns.
  Matrix re = column_space(r->right_mult(e_cp.coords));
  Matrix rf = column_space(r->right_mult(f_cp.coords));
  Matrix ra = r->right_mult(out.a.coords);
  bool moduleiso = false;
  if (auto in_f = rf.solve_matrix(ra * re)) {
    Matrix rb = r->right_mult(out.b.coords);
    if (auto back = re.solve_matrix(rb * rf)) moduleiso = (*in_f * *back).is_identity() && (*back * *in_f).is_identity();
  }
  out.verified = munu && numu && ab && ba && moduleiso;
  return out;
}

MatrixAlgebraReport matrix_algebra_certificate(const CrossedProduct& cp, const IdempotentSet& e,
                                               const IdemAction& act) {
  const ParameterSet& ps = cp.params();
  FreeActionReport fr = free_action_check(ps, act);
  if (!fr.free) throw ActionNotFree();
  OrbitEpsilon oe = orbit_epsilon(ps, e, act);

  MatrixAlgebraReport out;
  out.group_order = ps.G->order();
  AlgebraElement eps_cp = cp.embed_base(oe.epsilon.coords);
  CornerAlgebra corner = corner_algebra(cp.algebra(), eps_cp);
  out.corner_dim = corner.alg->dim();
  out.dim_identity = cp.algebra()->dim() == out.group_order * out.group_order * out.corner_dim;

  // Translates sigma_x(eps) are orthogonal idempotents summing to 1.
  std::vector<Vec> translates;
  Vec sum = zero_vec(ps.A->field(), ps.A->dim());
  for (uint32_t x = 0; x < ps.G->order(); ++x) {
    Vec t = ps.sigma[x].apply(oe.epsilon.coords);
    translates.push_back(t);
    sum = vec_add(sum, t);
  }
  out.translates_orthogonal = sum == ps.A->one();
  for (size_t i = 0; i < translates.size() && out.translates_orthogonal; ++i)
    for (size_t j = 0; j < translates.size() && out.translates_orthogonal; ++j) {
      Vec prod = ps.A->multiply(translates[i], translates[j]);
      if (i == j ? prod != translates[i] : !vec_is_zero(prod)) out.translates_orthogonal = false;
    }

  // CP sigma_x(eps) isomorphic to CP eps via the mu/nu maps, one orbit
  // representative at a time.
  out.translates_isomorphic = true;
  for (uint32_t x = 0; x < ps.G->order(); ++x) {
    OrbitIso iso = orbit_idempotent_isomorphism(cp, {ps.A, oe.epsilon.coords}, x);
    if (!iso.verified) {
      out.translates_isomorphic = false;
      break;
    }
  }
  return out;
}

FixedFreeReport fixed_algebra_free_module_check(const ParameterSet& ps, const IdempotentSet& e,
                                                const IdemAction& act,
                                                const AlgebraElement& epsilon) {
  FreeActionReport fr = free_action_check(ps, act);
  if (!fr.free) throw ActionNotFree();
  const FDAlgebra& a = *ps.A;
  const Field& f = a.field();

  FixedFreeReport out;
  Subgroup full = full_subgroup(ps.G);
  Subspace fixed = fixed_subalgebra(a, ps.sigma, full);
  Subspace timg = trace_image(a, ps.sigma, full);
  out.trace_image_is_fixed_algebra = fixed == timg;

  Matrix tr = trace_matrix(ps.sigma, full);
  out.all_translates_pass = true;
  for (uint32_t x = 0; x < ps.G->order(); ++x) {
    Vec eps_x = ps.sigma[x].apply(epsilon.coords);
    // phi: A^S -> A sigma_x(eps), a -> a sigma_x(eps)
    Matrix target = column_space(a.right_mult(eps_x));
    Matrix phi_on_fixed = a.right_mult(eps_x) * fixed.basis();
    auto phi = target.solve_matrix(phi_on_fixed);
    // psi: A sigma_x(eps) -> A^S, v -> trace(v)
    Matrix psi_on_target = tr * target;
    auto psi = fixed.basis().solve_matrix(psi_on_target);
    bool okay = phi && psi && (*psi * *phi).is_identity() && (*phi * *psi).is_identity();
    if (!okay) {
      out.all_translates_pass = false;
      out.witness_x = x;
      break;
    }
  }
  return out;
}

}  // namespace xprod
