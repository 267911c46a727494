#include "xprod/field.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace xprod {

namespace {

constexpr uint32_t kMaxDeg = 8;

using Digits = std::array<uint32_t, 2 * kMaxDeg>;

Digits unpack(uint64_t v, uint32_t p, uint32_t n) {
  Digits d{};
  for (uint32_t i = 0; i < n; ++i) {
    d[i] = static_cast<uint32_t>(v % p);
    v /= p;
  }
  return d;
}

uint64_t pack(const Digits& d, uint32_t p, uint32_t n) {
  uint64_t v = 0;
  for (uint32_t i = n; i-- > 0;) v = v * p + d[i];
  return v;
}

// Polynomial remainder of d (degree < 2*deg) by the packed monic modulus.
void reduce_mod(Digits& d, uint32_t p, uint32_t deg, uint64_t modulus) {
  Digits m = unpack(modulus, p, deg + 1);
  for (uint32_t i = 2 * deg; i-- > deg;) {
    uint64_t c = d[i];
    if (c == 0) continue;
    d[i] = 0;
    for (uint32_t j = 0; j < deg; ++j) {
      uint64_t sub = (c * m[j]) % p;
      d[i - deg + j] = static_cast<uint32_t>((d[i - deg + j] + p - sub) % p);
    }
  }
}

uint64_t ff_add(uint64_t a, uint64_t b, const Field& f) {
  Digits x = unpack(a, f.p, f.deg), y = unpack(b, f.p, f.deg);
  for (uint32_t i = 0; i < f.deg; ++i) x[i] = (x[i] + y[i]) % f.p;
  return pack(x, f.p, f.deg);
}

uint64_t ff_neg(uint64_t a, const Field& f) {
  Digits x = unpack(a, f.p, f.deg);
  for (uint32_t i = 0; i < f.deg; ++i) x[i] = (f.p - x[i]) % f.p;
  return pack(x, f.p, f.deg);
}

uint64_t ff_mul(uint64_t a, uint64_t b, const Field& f) {
  if (f.deg == 1) return (a * b) % f.p;
  Digits x = unpack(a, f.p, f.deg), y = unpack(b, f.p, f.deg);
  Digits z{};
  for (uint32_t i = 0; i < f.deg; ++i) {
    if (x[i] == 0) continue;
    for (uint32_t j = 0; j < f.deg; ++j)
      z[i + j] = static_cast<uint32_t>((z[i + j] + uint64_t(x[i]) * y[j]) % f.p);
  }
  reduce_mod(z, f.p, f.deg, f.modulus);
  return pack(z, f.p, f.deg);
}

uint64_t ff_pow(uint64_t a, uint64_t e, const Field& f) {
  uint64_t r = 1, base = a;
  while (e) {
    if (e & 1) r = ff_mul(r, base, f);
    base = ff_mul(base, base, f);
    e >>= 1;
  }
  return r;
}

// Irreducibility of a packed monic polynomial of degree deg over GF(p):
// no monic divisor of degree 1..deg/2.  Degrees here are tiny.
bool divides(uint64_t cand, uint32_t cdeg, uint64_t poly, uint32_t pdeg, uint32_t p) {
  std::vector<uint32_t> r(pdeg + 1);
  {
    uint64_t v = poly;
    for (uint32_t i = 0; i <= pdeg; ++i) {
      r[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
  }
  std::vector<uint32_t> c(cdeg + 1);
  {
    uint64_t v = cand;
    for (uint32_t i = 0; i <= cdeg; ++i) {
      c[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
  }
  for (uint32_t i = pdeg + 1; i-- > cdeg;) {
    uint32_t lead = r[i];
    if (lead == 0) continue;
    for (uint32_t j = 0; j <= cdeg; ++j) {
      uint64_t sub = (uint64_t(lead) * c[j]) % p;
      r[i - cdeg + j] = static_cast<uint32_t>((r[i - cdeg + j] + p - sub) % p);
    }
  }
  for (uint32_t i = 0; i < cdeg; ++i)
    if (r[i] != 0) return false;
  return true;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

uint64_t find_modulus(uint32_t p, uint32_t deg) {
  // Monic degree-deg polynomials, scanned in increasing packed order.
  uint64_t lead = ipow(p, deg);
  for (uint64_t tail = 1; tail < lead; ++tail) {
    uint64_t cand = lead + tail;
    if (tail % p == 0) continue;  // reducible: t divides
    bool irred = true;
    for (uint32_t d = 1; irred && 2 * d <= deg; ++d) {
      uint64_t dl = ipow(p, d);
      for (uint64_t dt = 0; dt < dl; ++dt)
        if (divides(dl + dt, d, cand, deg, p)) {
          irred = false;
          break;
        }
    }
    if (irred) return cand;
  }
  throw Error("no irreducible modulus found");
}

}  // namespace

Field Field::gf(uint32_t p, uint32_t deg) {
  if (p < 2) throw Error("field characteristic must be a prime >= 2");
  for (uint32_t d = 2; uint64_t(d) * d <= p; ++d)
    if (p % d == 0) throw Error("field characteristic must be prime: " + std::to_string(p));
  if (deg == 0 || deg > kMaxDeg) throw Error("unsupported extension degree");
  Field f;
  f.p = p;
  f.deg = deg;
  f.modulus = deg > 1 ? find_modulus(p, deg) : 0;
  if (f.order() > (uint64_t(1) << 31)) throw Error("field too large");
  return f;
}

uint64_t Field::order() const {
  if (is_rational()) throw Error("the rationals have no finite order");
  return ipow(p, deg);
}

std::string Field::to_string() const {
  if (is_rational()) return "QQ";
  if (deg == 1) return "GF(" + std::to_string(p) + ")";
  return "GF(" + std::to_string(p) + "^" + std::to_string(deg) + ")";
}

Scalar Scalar::of(const Field& f, int64_t n) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = n;
  } else {
    int64_t m = n % int64_t(f.p);
    if (m < 0) m += f.p;
    s.v_ = static_cast<uint64_t>(m);
  }
  return s;
}

Scalar Scalar::of(const Field& f, const Rational& q) {
  if (!f.is_rational()) throw Error("rational literal over a finite field");
  Scalar s(f);
  s.q_ = q;
  return s;
}

Scalar Scalar::from_rep(const Field& f, uint64_t packed) {
  if (f.is_rational()) throw Error("packed representation needs a finite field");
  Scalar s(f);
  Digits d = unpack(packed, f.p, f.deg);
  s.v_ = pack(d, f.p, f.deg);
  return s;
}

Scalar Scalar::from_index(const Field& f, uint64_t index) { return from_rep(f, index); }

uint64_t Scalar::index() const {
  if (f_.is_rational()) throw Error("index() needs a finite field");
  return v_;
}

bool Scalar::is_zero() const { return f_.is_rational() ? q_.is_zero() : v_ == 0; }

bool Scalar::is_one() const { return f_.is_rational() ? q_ == 1 : v_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(f_, o.f_);
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.v_ = ff_add(v_, o.v_, f_);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = -q_;
  else
    s.v_ = ff_neg(v_, f_);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(f_, o.f_);
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.v_ = ff_mul(v_, o.v_, f_);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.is_rational() ? q_ == o.q_ : v_ == o.v_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = 1 / q_;
  else
    s.v_ = ff_pow(v_, f_.order() - 2, f_);
  return s;
}

Scalar Scalar::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(f_), base = *this;
  uint64_t k = static_cast<uint64_t>(e);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Scalar Scalar::frobenius(uint32_t k) const {
  if (f_.is_rational()) return *this;
  Scalar s(f_);
  s.v_ = v_;
  for (uint32_t i = 0; i < k % f_.deg; ++i) s.v_ = ff_pow(s.v_, f_.p, f_);
  return s;
}

Scalar Scalar::inverse_frobenius(uint32_t k) const {
  if (f_.is_rational()) return *this;
  uint32_t r = k % f_.deg;
  return frobenius((f_.deg - r) % f_.deg);
}

std::string Scalar::to_string() const {
  if (f_.is_rational()) {
    std::ostringstream os;
    os << q_;
    return os.str();
  }
  return std::to_string(v_);
}

}  // namespace xprod
