#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xprod/matrix.hpp"

namespace xprod {

class FDAlgebra;
using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

// One structure-constant row: b_i * b_j = sum of (k, coeff).
using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;

// Finite-dimensional associative unital algebra given by structure constants
// on a fixed basis.  Construction verifies associativity on all basis triples
// and the identity law; instances are immutable.
class FDAlgebra {
 public:
  struct Quad {
    uint32_t i, j, k;
    Scalar c;
  };

  static AlgebraPtr from_structure_constants(const Field& f, size_t dim,
                                             const std::vector<Quad>& mult, const Vec& one);
  // Same data, no associativity/identity scan.  Used where the caller is
  // about to run the scan itself and wants the witness rather than a throw.
  static AlgebraPtr from_structure_constants_unchecked(const Field& f, size_t dim,
                                                       const std::vector<Quad>& mult,
                                                       const Vec& one);

  const Field& field() const { return f_; }
  size_t dim() const { return dim_; }
  const Vec& one() const { return one_; }
  const SparseVec& table(size_t i, size_t j) const { return table_[i * dim_ + j]; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Matrix left_mult(const Vec& a) const;   // x -> a*x
  Matrix right_mult(const Vec& a) const;  // x -> x*a
  bool is_commutative() const;

  // Returns the failing triple if some (b_i b_j) b_k != b_i (b_j b_k).
  std::optional<std::array<size_t, 3>> associativity_witness() const;
  std::optional<size_t> unit_witness() const;

  std::vector<Quad> quads() const;  // deterministic listing of the table

 private:
  FDAlgebra() = default;
  Field f_;
  size_t dim_ = 0;
  std::vector<SparseVec> table_;
  Vec one_;
};

struct AlgebraElement {
  AlgebraPtr alg;
  Vec coords;

  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr a, Vec c) : alg(std::move(a)), coords(std::move(c)) {}

  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  bool operator==(const AlgebraElement& o) const;
  bool is_zero() const { return vec_is_zero(coords); }

  // Two-sided inverse, if any; both sides are verified.
  std::optional<AlgebraElement> try_inverse() const;
  bool is_idempotent() const { return (*this * *this) == *this; }
};

AlgebraElement algebra_one(const AlgebraPtr& a);
AlgebraElement algebra_element(const AlgebraPtr& a, const Vec& coords);
AlgebraElement scalar_element(const AlgebraPtr& a, const Scalar& c);

// A subspace of a fixed coordinate space, held in canonical column-basis
// form so equality of subspaces is equality of matrices.
class Subspace {
 public:
  Subspace() = default;
  static Subspace from_spanning(const Matrix& columns);
  static Subspace zero(const Field& f, size_t ambient);
  static Subspace full(const Field& f, size_t ambient);

  size_t dim() const { return basis_.cols(); }
  size_t ambient_dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vec(size_t i) const { return basis_.col(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  // Coordinates of v in the basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace image_under(const Matrix& m) const;

 private:
  Matrix basis_;
};

struct IdempotentSet {
  std::vector<AlgebraElement> elems;
  size_t size() const { return elems.size(); }
};

// eAe with its unit detection; `embed` columns express the corner basis in
// the ambient algebra's coordinates.
struct CornerAlgebra {
  AlgebraPtr alg;
  Matrix embed;
  Vec project(const Vec& ambient) const;  // exe written in corner coordinates
};

struct QuotientAlgebra {
  AlgebraPtr alg;
  Matrix projection;  // ambient -> quotient coordinates
  Matrix section;     // quotient -> ambient representatives
};

Subspace center(const FDAlgebra& a);

struct RadicalCertificate {
  bool ideal_closed = false;
  bool nilpotent = false;
  size_t nilpotency_index = 0;  // least m with R^m = 0
  bool quotient_semisimple = false;
  bool ok() const { return ideal_closed && nilpotent && quotient_semisimple; }
};

// Jacobson radical.  Trace-form kernel in characteristic 0; the iterated
// p-power refinement of the trace form in characteristic p.  The returned
// certificate, not the algorithm, is the correctness contract.
Subspace radical(const FDAlgebra& a);
std::pair<Subspace, RadicalCertificate> radical_with_certificate(const FDAlgebra& a);

QuotientAlgebra quotient_algebra(const FDAlgebra& a, const Subspace& ideal);
CornerAlgebra corner_algebra(const AlgebraPtr& a, const AlgebraElement& e);

bool is_ideal(const FDAlgebra& a, const Subspace& s, std::string* witness = nullptr);
bool is_algebra_automorphism(const FDAlgebra& a, const Matrix& m);

struct IdemValidation {
  enum class Failure {
    None,
    NotIdempotent,
    NotOrthogonal,
    NotComplete,
    NotPrimitive,  // a proper idempotent splits the corner
    NotSplit,      // corner of the semisimple quotient is a bigger division algebra
  };
  Failure failure = Failure::None;
  size_t i = 0, j = 0;
  size_t corner_dim = 0;
  bool ok() const { return failure == Failure::None; }
  std::string describe() const;
};

IdemValidation validate_idempotent_set(const AlgebraPtr& a, const IdempotentSet& e);

struct AlgebraProfile {
  size_t dim = 0;
  bool commutative = false;
  bool local = false;
  std::vector<size_t> loewy;  // dims of R^i / R^(i+1), top layer first
  bool operator==(const AlgebraProfile&) const = default;
  std::string to_string() const;
};

// Isomorphism-invariant profile; enough to pin k[X]/(X^2).
AlgebraProfile characterize_local_commutative(const AlgebraPtr& a);

// A deterministic supply of units for fixture generation: nonzero scalars
// and 1 + r for radical basis elements r, then pairwise products.
std::vector<AlgebraElement> some_units(const AlgebraPtr& a, size_t count);

}  // namespace xprod
