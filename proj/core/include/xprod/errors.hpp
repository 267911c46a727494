#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xprod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands live over different fields") {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct NotAssociative : Error {
  size_t i, j, k;
  NotAssociative(size_t i_, size_t j_, size_t k_)
      : Error("multiplication not associative at basis triple (" + std::to_string(i_) + "," +
              std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct NotUnital : Error {
  size_t witness;
  explicit NotUnital(size_t w)
      : Error("declared identity fails on basis element " + std::to_string(w)), witness(w) {}
};

struct MixedAlgebras : Error {
  MixedAlgebras() : Error("elements belong to different algebras") {}
};

struct NotIdempotent : Error {
  NotIdempotent() : Error("element is not idempotent") {}
};

struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& w) : Error("subspace is not a two-sided ideal: " + w) {}
};

struct NotSplit : Error {
  explicit NotSplit(const std::string& detail) : Error("algebra not split over its ground field: " + detail) {}
};

struct InfiniteDimensional : Error {
  explicit InfiniteDimensional(const std::string& w) : Error("path enumeration does not stabilize: " + w) {}
};

struct InhomogeneousRelation : Error {
  size_t index;
  explicit InhomogeneousRelation(size_t idx, const std::string& why)
      : Error("relation " + std::to_string(idx) + " is not admissible: " + why), index(idx) {}
};

struct RelationsNotPreserved : Error {
  size_t relation;
  explicit RelationsNotPreserved(size_t r)
      : Error("symmetry does not preserve relation " + std::to_string(r)), relation(r) {}
};

struct GroupTableError : Error {
  enum class Kind { NotAssociative, NoIdentity, NoInverse, BadShape };
  Kind kind;
  uint32_t a = 0, b = 0, c = 0;
  GroupTableError(Kind k, const std::string& msg, uint32_t a_ = 0, uint32_t b_ = 0, uint32_t c_ = 0)
      : Error(msg), kind(k), a(a_), b(b_), c(c_) {}
};

struct OrderTooLarge : Error {
  OrderTooLarge() : Error("group order exceeds the exhaustive-search cap") {}
};

struct NotUnitError : Error {
  uint32_t x, y;
  NotUnitError(uint32_t x_, uint32_t y_)
      : Error("alpha(" + std::to_string(x_) + "," + std::to_string(y_) + ") is not invertible"),
        x(x_), y(y_) {}
};

struct AlphaNotScalar : Error {
  uint32_t x, y;
  AlphaNotScalar(uint32_t x_, uint32_t y_)
      : Error("alpha(" + std::to_string(x_) + "," + std::to_string(y_) + ") is not a scalar multiple of 1"),
        x(x_), y(y_) {}
};

struct IndexNotInvertible : Error {
  IndexNotInvertible() : Error("subgroup index is not invertible in the algebra") {}
};

struct NotClosed : Error {
  uint32_t x;
  size_t idx;
  NotClosed(uint32_t x_, size_t i_)
      : Error("sigma_" + std::to_string(x_) + " maps idempotent " + std::to_string(i_) +
              " outside the given set"),
        x(x_), idx(i_) {}
};

struct ActionNotFree : Error {
  ActionNotFree() : Error("the group action on the idempotent set is not free") {}
};

struct NotApplicableError : Error {
  explicit NotApplicableError(const std::string& why) : Error("not applicable: " + why) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

}  // namespace xprod
