// Monomials: fixed-width exponent vectors with overflow detection.  The
// kernel never needs more than a couple of dozen variables (ambient product
// rings plus a few auxiliary elimination variables), so exponents live in a
// fixed-capacity array to keep Groebner inner loops allocation-free.
#pragma once

#include <array>
#include <cstdint>

#include "detvar/common.hpp"

namespace detvar {

constexpr int kMaxVars = 24;
constexpr uint32_t kMaxExponent = 0xffff;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};  // exponents, zero beyond nvars
  uint32_t deg = 0;                    // cached total (unweighted) degree

  static Monomial unit() { return Monomial{}; }
  static Monomial var(int i, int pow = 1) {
    Monomial m;
    m.e[i] = (uint16_t)pow;
    m.deg = pow;
    return m;
  }

  bool is_unit() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  // Arbitrary strict total order for use as a container key (not a term
  // order): degree, then lexicographic on exponents.
  bool operator<(const Monomial& o) const {
    if (deg != o.deg) return deg < o.deg;
    return e < o.e;
  }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    uint32_t s = (uint32_t)a.e[i] + b.e[i];
    if (s > kMaxExponent)
      throw Error(ErrKind::DegreeBoundExceeded, "monomial exponent overflow");
    r.e[i] = (uint16_t)s;
    d += s;
  }
  r.deg = d;
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  // a / b, caller guarantees divisibility
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = (uint16_t)(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

}  // namespace detvar
