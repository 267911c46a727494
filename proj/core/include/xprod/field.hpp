#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "xprod/errors.hpp"

namespace xprod {

using Rational = boost::multiprecision::cpp_rational;

// Ground field: the rationals (p == 0) or GF(p^deg).
// For deg > 1 elements are residues of GF(p)[t] modulo a monic irreducible
// polynomial of degree `deg`; polynomials are packed in base p, lowest
// coefficient in the least significant digit, leading coefficient included.
struct Field {
  uint32_t p = 0;
  uint32_t deg = 1;
  uint64_t modulus = 0;

  static Field rationals() { return Field{}; }
  // Uses the lexicographically least monic irreducible modulus for deg > 1.
  static Field gf(uint32_t p, uint32_t deg = 1);

  bool is_rational() const { return p == 0; }
  uint64_t order() const;  // p^deg; throws for the rationals
  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

class Scalar {
 public:
  Scalar() : f_(Field::rationals()) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return of(f, 1); }
  static Scalar of(const Field& f, int64_t n);
  static Scalar of(const Field& f, const Rational& q);
  // Packed representation (finite fields); reduces digits mod p.
  static Scalar from_rep(const Field& f, uint64_t packed);
  // Enumeration handle: index in [0, order) for finite fields.
  static Scalar from_index(const Field& f, uint64_t index);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;  // throws DivisionByZero
  Scalar pow(int64_t e) const;
  // x -> x^(p^k) and its inverse on GF(p^deg).
  Scalar frobenius(uint32_t k = 1) const;
  Scalar inverse_frobenius(uint32_t k) const;

  uint64_t rep() const { return v_; }
  uint64_t index() const;  // inverse of from_index
  const Rational& rational() const { return q_; }
  std::string to_string() const;

 private:
  explicit Scalar(const Field& f) : f_(f) {}
  Field f_;
  uint64_t v_ = 0;  // finite-field value, packed
  Rational q_;      // rational value, used iff f_.p == 0
};

inline void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch();
}

}  // namespace xprod
