#include "xprod/resolve.hpp"

#include "xprod/errors.hpp"

namespace xprod {

std::string DimStatus::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return "Finite(" + std::to_string(value) + ")";
    case Kind::Infinite:
      return "Infinite(Omega^" + std::to_string(cycle_i) + " = Omega^" + std::to_string(cycle_j) + ")";
    case Kind::Undetermined:
      return "Undetermined";
  }
  return "?";
}

ProjIndec projective_indecomposable(const SplitAlgebra& s, size_t idem_index) {
  const AlgebraPtr& a = s.A;
  Matrix basis = column_space(a->right_mult(s.E.elems[idem_index].coords));
  std::vector<Matrix> act;
  act.reserve(a->dim());
  for (size_t i = 0; i < a->dim(); ++i) {
    auto c = basis.solve_matrix(a->left_mult(unit_vec(a->field(), a->dim(), i)) * basis);
    if (!c) throw Error("Ae is not invariant under left multiplication");
    act.push_back(*c);
  }
  return {FDModule(a, std::move(act)), basis};
}

namespace {

// rad M as a subspace of M.
Subspace radical_submodule(const SplitAlgebra& s, const FDModule& m) {
  std::vector<Vec> gens;
  for (size_t t = 0; t < s.rad.dim(); ++t) {
    Matrix r = m.act_element(s.rad.basis_vec(t));
    for (size_t j = 0; j < m.dim(); ++j) gens.push_back(r.col(j));
  }
  return Subspace::from_spanning(Matrix::from_cols(m.algebra()->field(), m.dim(), gens));
}

}  // namespace

FDModule simple_module(const SplitAlgebra& s, size_t class_index) {
  ProjIndec p = projective_indecomposable(s, s.class_rep[class_index]);
  return quotient_module(p.mod, radical_submodule(s, p.mod)).mod;
}

std::vector<size_t> top_vector(const SplitAlgebra& s, const FDModule& m) {
  QuotModule bar = quotient_module(m, radical_submodule(s, m));
  std::vector<size_t> mult(s.num_classes(), 0);
  for (size_t c = 0; c < s.num_classes(); ++c) {
    Matrix e = bar.mod.act_element(s.E.elems[s.class_rep[c]].coords);
    mult[c] = e.rank();
  }
  return mult;
}

Cover projective_cover(const SplitAlgebra& s, const FDModule& m) {
  const AlgebraPtr& a = s.A;
  const Field& f = a->field();
  Cover out;
  out.mult = top_vector(s, m);

  QuotModule bar = quotient_module(m, radical_submodule(s, m));
  std::vector<FDModule> parts;
  std::vector<Matrix> part_maps;  // component maps P_c -> M
  for (size_t c = 0; c < s.num_classes(); ++c) {
    if (out.mult[c] == 0) continue;
    size_t rep = s.class_rep[c];
    const Vec& e = s.E.elems[rep].coords;
    // Basis w_1..w_k of e * (M / rad M), pulled back to v_t in e*M.
    Matrix ebar = bar.mod.act_element(e);
    Matrix w = column_space(ebar);
    Matrix pe = bar.proj * m.act_element(e);
    ProjIndec pi = projective_indecomposable(s, rep);
    for (size_t t = 0; t < out.mult[c]; ++t) {
      auto v = pe.solve(w.col(t));
      if (!v) throw Error("cover: no preimage for a top basis vector");
      Vec vt = m.act_element(e).apply(*v);
      // Component Ae -> M, a e -> a v_t.
      Matrix comp(f, m.dim(), pi.mod.dim());
      for (size_t col = 0; col < pi.mod.dim(); ++col)
        comp.set_col(col, m.act_element(pi.embed.col(col)).apply(vt));
      parts.push_back(pi.mod);
      part_maps.push_back(comp);
      out.summands.push_back(rep);
    }
  }
  if (parts.empty()) {
    out.p = FDModule::zero_module(a);
    out.epi = Matrix(f, m.dim(), 0);
    return out;
  }
  DirectSum ds = direct_sum(a, parts);
  out.p = ds.mod;
  Matrix epi(f, m.dim(), ds.mod.dim());
  for (size_t t = 0; t < parts.size(); ++t)
    for (size_t col = 0; col < parts[t].dim(); ++col)
      epi.set_col(ds.offsets[t] + col, part_maps[t].col(col));
  out.epi = epi;

  if (column_space(epi).cols() != m.dim()) throw Error("cover map is not surjective");
  // Minimality: ker(epi) <= rad P.
  Subspace ker = Subspace::from_spanning(epi.nullspace_basis());
  if (!radical_submodule(s, out.p).contains(ker)) throw Error("cover is not minimal");
  return out;
}

SyzygyStep syzygy(const SplitAlgebra& s, const FDModule& m) {
  SyzygyStep out{projective_cover(s, m), {}, {}};
  Subspace ker = Subspace::from_spanning(out.cover.epi.nullspace_basis());
  SubModule sub = submodule(out.cover.p, ker);
  out.omega = sub.mod;
  out.embed = sub.embed;
  return out;
}

ResolutionReport pd_report(const SplitAlgebra& s, const FDModule& m, size_t cutoff,
                           const IsoOptions& iso) {
  ResolutionReport rep;
  std::vector<FDModule> omegas{m};
  std::vector<std::vector<size_t>> tops{top_vector(s, m)};
  FDModule cur = m;
  for (size_t step = 0; step <= cutoff; ++step) {
    if (cur.dim() == 0) {
      rep.status.kind = DimStatus::Kind::Finite;
      rep.status.value = step == 0 ? 0 : step - 1;
      return rep;
    }
    SyzygyStep sz = syzygy(s, cur);
    rep.terms.push_back(sz.cover.mult);
    rep.syzygy_dims.push_back(sz.omega.dim());
    cur = sz.omega;
    std::vector<size_t> top = cur.dim() ? top_vector(s, cur) : std::vector<size_t>(s.num_classes(), 0);
    // Cycle detection against all earlier syzygies with equal fingerprints.
    for (size_t i = 0; i < omegas.size(); ++i) {
      if (omegas[i].dim() != cur.dim() || cur.dim() == 0 || tops[i] != top) continue;
      IsoResult r = is_isomorphic(omegas[i], cur, iso);
      if (r.status == IsoResult::Status::Yes) {
        rep.status.kind = DimStatus::Kind::Infinite;
        rep.status.cycle_i = i;
        rep.status.cycle_j = step + 1;
        return rep;
      }
    }
    omegas.push_back(cur);
    tops.push_back(top);
  }
  rep.status.kind = DimStatus::Kind::Undetermined;
  return rep;
}

GlobalDimReport gldim_report(const SplitAlgebra& s, size_t cutoff, const IsoOptions& iso) {
  GlobalDimReport out;
  out.status.kind = DimStatus::Kind::Finite;
  out.status.value = 0;
  for (size_t c = 0; c < s.num_classes(); ++c) {
    ResolutionReport r = pd_report(s, simple_module(s, c), cutoff, iso);
    if (r.status.kind == DimStatus::Kind::Infinite && out.status.kind != DimStatus::Kind::Infinite) {
      out.status = r.status;
    } else if (r.status.kind == DimStatus::Kind::Undetermined &&
               out.status.kind == DimStatus::Kind::Finite) {
      out.status.kind = DimStatus::Kind::Undetermined;
    } else if (r.status.kind == DimStatus::Kind::Finite &&
               out.status.kind == DimStatus::Kind::Finite && r.status.value > out.status.value) {
      out.status.value = r.status.value;
    }
    out.per_simple.push_back(std::move(r));
  }
  return out;
}

size_t ext1_dim(const SplitAlgebra& s, size_t class_i, size_t class_j) {
  SyzygyStep sz = syzygy(s, simple_module(s, class_i));
  if (sz.omega.dim() == 0) return 0;
  return top_vector(s, sz.omega)[class_j];
}

size_t ext1_dim_modules(const SplitAlgebra& s, const FDModule& m, const FDModule& n) {
  // Z/B on Hom(P1, N) for the minimal resolution P2 -> P1 -> P0 -> M.
  if (m.dim() == 0) return 0;
  SyzygyStep s0 = syzygy(s, m);
  if (s0.omega.dim() == 0) return 0;
  SyzygyStep s1 = syzygy(s, s0.omega);
  Matrix d1 = s0.embed * s1.cover.epi;  // P1 -> P0
  bool have_d2 = s1.omega.dim() > 0;
  Matrix d2(n.algebra()->field(), 0, 0);
  if (have_d2) {
    SyzygyStep s2 = syzygy(s, s1.omega);
    d2 = s1.embed * s2.cover.epi;  // P2 -> P1
  }
  std::vector<Matrix> hom_p1 = hom_space(s1.cover.p, n);
  std::vector<Matrix> hom_p0 = hom_space(s0.cover.p, n);
  const Field& f = n.algebra()->field();
  // Cocycles: f in Hom(P1, N) with f . d2 = 0.
  size_t z;
  if (!have_d2 || hom_p1.empty()) {
    z = hom_p1.size();
  } else {
    Matrix sys(f, n.dim() * d2.cols(), hom_p1.size());
    for (size_t t = 0; t < hom_p1.size(); ++t) {
      Matrix r = hom_p1[t] * d2;
      for (size_t rr = 0; rr < r.rows(); ++rr)
        for (size_t cc = 0; cc < r.cols(); ++cc) sys.at(rr * r.cols() + cc, t) = r.at(rr, cc);
    }
    z = sys.nullspace_basis().cols();
  }
  // Coboundaries: g . d1 for g in Hom(P0, N).
  size_t b = 0;
  if (!hom_p0.empty()) {
    std::vector<Vec> imgs;
    for (const auto& g : hom_p0) {
      Matrix r = g * d1;
      Vec v;
      v.reserve(r.rows() * r.cols());
      for (size_t rr = 0; rr < r.rows(); ++rr)
        for (size_t cc = 0; cc < r.cols(); ++cc) v.push_back(r.at(rr, cc));
      imgs.push_back(v);
    }
    b = Subspace::from_spanning(
            Matrix::from_cols(f, imgs.empty() ? 0 : imgs[0].size(), imgs))
            .dim();
  }
  return z - b;
}

std::vector<size_t> loop_counts(const SplitAlgebra& s) {
  const AlgebraPtr& a = s.A;
  const Field& f = a->field();
  // rad^2 inside rad.
  std::vector<Vec> prods;
  for (size_t i = 0; i < s.rad.dim(); ++i)
    for (size_t j = 0; j < s.rad.dim(); ++j)
      prods.push_back(a->multiply(s.rad.basis_vec(i), s.rad.basis_vec(j)));
  Subspace rad2 = Subspace::from_spanning(Matrix::from_cols(f, a->dim(), prods));
  std::vector<size_t> out;
  for (size_t c = 0; c < s.num_classes(); ++c) {
    const Vec& e = s.E.elems[s.class_rep[c]].coords;
    Matrix pick = a->left_mult(e) * a->right_mult(e);
    Subspace erad_e = s.rad.image_under(pick);
    Subspace erad2_e = rad2.image_under(pick);
    out.push_back(erad_e.dim() - erad2_e.dim());
  }
  return out;
}

}  // namespace xprod
