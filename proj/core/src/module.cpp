#include "xprod/module.hpp"

#include "xprod/errors.hpp"

namespace xprod {

FDModule::FDModule(AlgebraPtr a, std::vector<Matrix> action) : a_(std::move(a)), act_(std::move(action)) {
  if (act_.size() != a_->dim()) throw ShapeMismatch("one action matrix per basis element");
  dim_ = act_.empty() ? 0 : act_[0].rows();
  const Field& f = a_->field();
  for (const auto& m : act_)
    if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == f))
      throw ShapeMismatch("action matrix shape");
  // action(one) = id and action respects the structure constants.
  if (!act_element(a_->one()).is_identity()) throw ValidationError("module action: one acts as identity fails");
  for (size_t i = 0; i < a_->dim(); ++i)
    for (size_t j = 0; j < a_->dim(); ++j) {
      Matrix lhs = act_[i] * act_[j];
      Matrix rhs(f, dim_, dim_);
      for (const auto& [k, c] : a_->table(i, j)) rhs = rhs + act_[k].scaled(c);
      if (!(lhs == rhs))
        throw ValidationError("module action incompatible with structure constants at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

Matrix FDModule::act_element(const Vec& coords) const {
  Matrix m(a_->field(), dim_, dim_);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) m = m + act_[i].scaled(coords[i]);
  return m;
}

FDModule FDModule::regular(const AlgebraPtr& a) {
  std::vector<Matrix> act;
  act.reserve(a->dim());
  for (size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_mult(unit_vec(a->field(), a->dim(), i)));
  return FDModule(a, std::move(act));
}

FDModule FDModule::zero_module(const AlgebraPtr& a) {
  return FDModule(a, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)));
}

SubModule submodule(const FDModule& m, const Subspace& s) {
  const AlgebraPtr& a = m.algebra();
  std::vector<Matrix> act;
  act.reserve(a->dim());
  for (size_t i = 0; i < a->dim(); ++i) {
    auto c = s.basis().solve_matrix(m.act(i) * s.basis());
    if (!c) throw ValidationError("subspace is not invariant under the action");
    act.push_back(*c);
  }
  return {FDModule(a, std::move(act)), s.basis()};
}

QuotModule quotient_module(const FDModule& m, const Subspace& s) {
  const AlgebraPtr& a = m.algebra();
  // Reuse the canonical complement construction.
  const Field& f = a->field();
  const size_t d = m.dim();
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
  Matrix full = Matrix::hstack(s.basis(), section);
  auto inv = full.inverse();
  if (!inv) throw ShapeMismatch("quotient by a non-subspace");
  Matrix proj = inv->submatrix(s.dim(), 0, comp.size(), d);
  std::vector<Matrix> act;
  act.reserve(a->dim());
  for (size_t i = 0; i < a->dim(); ++i) act.push_back(proj * m.act(i) * section);
  return {FDModule(a, std::move(act)), proj, section};
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<FDModule>& parts) {
  const Field& f = a->field();
  size_t total = 0;
  std::vector<size_t> offsets;
  for (const auto& p : parts) {
    offsets.push_back(total);
    total += p.dim();
  }
  std::vector<Matrix> act(a->dim(), Matrix(f, total, total));
  for (size_t i = 0; i < a->dim(); ++i)
    for (size_t t = 0; t < parts.size(); ++t)
      for (size_t r = 0; r < parts[t].dim(); ++r)
        for (size_t c = 0; c < parts[t].dim(); ++c)
          act[i].at(offsets[t] + r, offsets[t] + c) = parts[t].act(i).at(r, c);
  return {FDModule(a, std::move(act)), offsets};
}

Subspace submodule_generated(const FDModule& m, const std::vector<Vec>& gens) {
  const AlgebraPtr& a = m.algebra();
  Subspace cur = Subspace::from_spanning(Matrix::from_cols(m.algebra()->field(), m.dim(), gens));
  while (true) {
    std::vector<Vec> next;
    for (size_t t = 0; t < cur.dim(); ++t) next.push_back(cur.basis_vec(t));
    for (size_t i = 0; i < a->dim(); ++i)
      for (size_t t = 0; t < cur.dim(); ++t) next.push_back(m.act(i).apply(cur.basis_vec(t)));
    Subspace grown = Subspace::from_spanning(Matrix::from_cols(a->field(), m.dim(), next));
    if (grown.dim() == cur.dim()) return cur;
    cur = grown;
  }
}

std::vector<Matrix> hom_space(const FDModule& m, const FDModule& n) {
  if (m.algebra() != n.algebra()) throw MixedAlgebras();
  const Field& f = m.algebra()->field();
  const size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  // Current solution space of F N x M matrices, cut down per basis element.
  std::vector<Matrix> basis;
  for (size_t r = 0; r < dn; ++r)
    for (size_t c = 0; c < dm; ++c) {
      Matrix e(f, dn, dm);
      e.at(r, c) = Scalar::one(f);
      basis.push_back(e);
    }
  for (size_t i = 0; i < m.algebra()->dim() && !basis.empty(); ++i) {
    Matrix sys(f, dn * dm, basis.size());
    for (size_t t = 0; t < basis.size(); ++t) {
      Matrix r = basis[t] * m.act(i) - n.act(i) * basis[t];
      for (size_t rr = 0; rr < dn; ++rr)
        for (size_t cc = 0; cc < dm; ++cc) sys.at(rr * dm + cc, t) = r.at(rr, cc);
    }
    Matrix ker = sys.nullspace_basis();
    std::vector<Matrix> next;
    for (size_t k = 0; k < ker.cols(); ++k) {
      Matrix comb(f, dn, dm);
      for (size_t t = 0; t < basis.size(); ++t)
        if (!ker.at(t, k).is_zero()) comb = comb + basis[t].scaled(ker.at(t, k));
      next.push_back(comb);
    }
    basis = std::move(next);
  }
  return basis;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int64_t> d(-4, 4);
    return Scalar::of(f, d(rng));
  }
  std::uniform_int_distribution<uint64_t> d(0, f.order() - 1);
  return Scalar::from_index(f, d(rng));
}

IsoResult is_isomorphic(const FDModule& m, const FDModule& n, const IsoOptions& opt) {
  const Field& f = m.algebra()->field();
  if (m.dim() != n.dim()) return {IsoResult::Status::No, {}};
  if (m.dim() == 0) return {IsoResult::Status::Yes, Matrix(f, 0, 0)};
  std::vector<Matrix> homs = hom_space(m, n);
  if (homs.empty()) return {IsoResult::Status::No, {}};
  const size_t h = homs.size();

  if (!f.is_rational()) {
    // Exhaustive combination scan when q^h is small.
    uint64_t q = f.order(), total = 1;
    bool small = true;
    for (size_t i = 0; i < h; ++i) {
      if (total > opt.exhaustive_limit / q) {
        small = false;
        break;
      }
      total *= q;
    }
    if (small) {
      for (uint64_t code = 1; code < total; ++code) {
        uint64_t c = code;
        Matrix comb(f, n.dim(), m.dim());
        for (size_t i = 0; i < h; ++i) {
          uint64_t digit = c % q;
          c /= q;
          if (digit) comb = comb + homs[i].scaled(Scalar::from_index(f, digit));
        }
        if (comb.inverse()) return {IsoResult::Status::Yes, comb};
      }
      return {IsoResult::Status::No, {}};
    }
  }

  // Seeded random combinations; a miss cannot rule an isomorphism out.
  std::mt19937_64 rng(opt.seed);
  for (size_t t = 0; t < opt.random_trials; ++t) {
    Matrix comb(f, n.dim(), m.dim());
    for (size_t i = 0; i < h; ++i) comb = comb + homs[i].scaled(random_scalar(f, rng));
    if (comb.inverse()) return {IsoResult::Status::Yes, comb};
  }
  return {IsoResult::Status::Undetermined, {}};
}

FDModule random_module(const AlgebraPtr& a, size_t free_rank, size_t num_relations,
                       std::mt19937_64& rng) {
  std::vector<FDModule> copies(free_rank, FDModule::regular(a));
  DirectSum fr = direct_sum(a, copies);
  std::vector<Vec> gens;
  for (size_t t = 0; t < num_relations; ++t) {
    Vec v = zero_vec(a->field(), fr.mod.dim());
    for (size_t i = 0; i < v.size(); ++i) v[i] = random_scalar(a->field(), rng);
    gens.push_back(v);
  }
  if (gens.empty()) return fr.mod;
  Subspace sub = submodule_generated(fr.mod, gens);
  if (sub.dim() == fr.mod.dim()) return fr.mod;  // quotient collapsed; keep the free module
  return quotient_module(fr.mod, sub).mod;
}

}  // namespace xprod
