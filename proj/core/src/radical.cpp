#include <vector>

#include "xprod/algebra.hpp"
#include "xprod/errors.hpp"

namespace xprod {

namespace {

// Characteristic polynomial via Hessenberg reduction (divisions stay inside
// the field, so this is characteristic-safe).  Coefficients low-first, monic.
std::vector<Scalar> char_poly(Matrix m) {
  const Field& f = m.field();
  const size_t n = m.rows();
  // Reduce to upper Hessenberg by similarity.
  for (size_t j = 0; j + 2 < n; ++j) {
    size_t piv = j + 1;
    while (piv < n && m.at(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (size_t c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(j + 1, c));
      for (size_t r = 0; r < n; ++r) std::swap(m.at(r, piv), m.at(r, j + 1));
    }
    Scalar inv = m.at(j + 1, j).inverse();
    for (size_t i = j + 2; i < n; ++i) {
      if (m.at(i, j).is_zero()) continue;
      Scalar factor = m.at(i, j) * inv;
      for (size_t c = 0; c < n; ++c) m.at(i, c) -= factor * m.at(j + 1, c);
      for (size_t r = 0; r < n; ++r) m.at(r, j + 1) += factor * m.at(r, i);
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar::one(f)};
  for (size_t k = 1; k <= n; ++k) {
    // (lambda - h_{k-1,k-1}) p_{k-1}
    std::vector<Scalar> cur(k + 1, Scalar::zero(f));
    for (size_t t = 0; t < p[k - 1].size(); ++t) {
      cur[t + 1] += p[k - 1][t];
      cur[t] -= m.at(k - 1, k - 1) * p[k - 1][t];
    }
    Scalar run = Scalar::one(f);
    for (size_t i = 1; i < k; ++i) {
      run *= m.at(k - i, k - i - 1);
      if (run.is_zero()) break;
      Scalar coeff = m.at(k - 1 - i, k - 1) * run;
      if (coeff.is_zero()) continue;
      for (size_t t = 0; t < p[k - 1 - i].size(); ++t) cur[t] -= coeff * p[k - 1 - i][t];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

// e_m of the eigenvalues: up to sign the coefficient of lambda^(n-m).
Scalar elementary_symmetric(const std::vector<Scalar>& cp, size_t m) {
  size_t n = cp.size() - 1;
  Scalar c = cp[n - m];
  if (m % 2 == 1) c = -c;
  return c;
}

Subspace radical_raw(const FDAlgebra& a) {
  const Field& f = a.field();
  const size_t d = a.dim();
  if (d == 0) return Subspace::zero(f, 0);

  // Current candidate ideal, as a basis matrix (columns).
  Matrix basis = Matrix::identity(f, d);

  uint32_t steps = 1;  // characteristic zero: the plain trace form
  if (!f.is_rational()) {
    steps = 1;
    uint64_t power = f.p;
    while (power <= d) {
      power *= f.p;
      ++steps;
    }
  }

  for (uint32_t j = 0; j < steps; ++j) {
    size_t m = basis.cols();
    if (m == 0) break;
    // T[row y][col t] = e_{p^j}(L_{v_t * y}); for j = 0 this is the trace form.
    size_t em = 1;
    for (uint32_t t = 0; t < j; ++t) em *= f.p;
    Matrix T(f, m, m);
    for (size_t y = 0; y < m; ++y) {
      Vec vy = basis.col(y);
      for (size_t t = 0; t < m; ++t) {
        Vec prod = a.multiply(basis.col(t), vy);
        if (em == 1) {
          Matrix L = a.left_mult(prod);
          Scalar tr = Scalar::zero(f);
          for (size_t i = 0; i < d; ++i) tr += L.at(i, i);
          T.at(y, t) = tr;
        } else {
          T.at(y, t) = elementary_symmetric(char_poly(a.left_mult(prod)), em);
        }
      }
    }
    Matrix ker = T.nullspace_basis();
    // The system is p^j-semilinear in the coefficients: undo the Frobenius.
    if (!f.is_rational() && j > 0)
      for (size_t r = 0; r < ker.rows(); ++r)
        for (size_t c = 0; c < ker.cols(); ++c) ker.at(r, c) = ker.at(r, c).inverse_frobenius(j);
    basis = column_space(basis * ker);
  }
  return Subspace::from_spanning(basis);
}

}  // namespace

std::pair<Subspace, RadicalCertificate> radical_with_certificate(const FDAlgebra& a) {
  Subspace rad = radical_raw(a);
  RadicalCertificate cert;
  cert.ideal_closed = is_ideal(a, rad, nullptr);

  // Nilpotency by powering the subspace.
  Subspace power = rad;
  size_t steps = 1;
  while (power.dim() > 0 && steps <= a.dim() + 1) {
    std::vector<Vec> prods;
    for (size_t s = 0; s < power.dim(); ++s)
      for (size_t t = 0; t < rad.dim(); ++t)
        prods.push_back(a.multiply(power.basis_vec(s), rad.basis_vec(t)));
    Subspace next = Subspace::from_spanning(Matrix::from_cols(a.field(), a.dim(), prods));
    if (next.dim() >= power.dim() && next.dim() > 0) break;  // not shrinking: not nilpotent
    power = next;
    ++steps;
  }
  cert.nilpotent = power.dim() == 0;
  cert.nilpotency_index = steps;

  if (cert.ideal_closed) {
    QuotientAlgebra q = quotient_algebra(a, rad);
    cert.quotient_semisimple = radical_raw(*q.alg).dim() == 0;
  }
  return {rad, cert};
}

Subspace radical(const FDAlgebra& a) {
  auto [rad, cert] = radical_with_certificate(a);
  if (!cert.ok()) throw Error("radical certificate failed; field not supported for this input");
  return rad;
}

}  // namespace xprod
