// Coefficient fields: the rationals (GMP-backed, always reduced, positive
// denominator) and prime fields F_p for odd p < 2^31 (elements stored as
// int64_t in [0, p)).  Both satisfy the same compile-time interface so the
// rest of the kernel is templated on the field type.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "detvar/common.hpp"

namespace detvar {

// Deterministic Miller-Rabin, exact for all n < 2^32 (witnesses 2, 7, 61).
inline bool is_prime_u32(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ULL, 7ULL, 61ULL}) {
    uint64_t x = 1, base = a % n, e = d;
    while (e) {  // modular exponentiation in 128-bit intermediates
      if (e & 1) x = (unsigned __int128)x * base % n;
      base = (unsigned __int128)base * base % n;
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = (unsigned __int128)x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Runtime description of a coefficient field, as selected on the CLI.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime(uint64_t p) {
    if (p >= (1ULL << 31))
      throw Error(ErrKind::BadField, "prime must be < 2^31");
    if (p == 2)
      throw Error(ErrKind::BadCharacteristic,
                  "characteristic 2 not supported");
    if (!is_prime_u32(p))
      throw Error(ErrKind::BadField, std::to_string(p) + " is not prime");
    return FieldSpec{Kind::Prime, (uint32_t)p};
  }
  // Accepts "q" or "fp:<prime>".
  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
      uint64_t v = 0;
      for (char c : s.substr(3)) {
        if (c < '0' || c > '9')
          throw Error(ErrKind::BadField, "bad field spec '" + s + "'");
        v = v * 10 + (c - '0');
        if (v >= (1ULL << 32))
          throw Error(ErrKind::BadField, "prime must be < 2^31");
      }
      return prime(v);
    }
    throw Error(ErrKind::BadField, "bad field spec '" + s + "' (want q or fp:<p>)");
  }
  std::string str() const {
    return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p);
  }
  uint32_t characteristic() const { return kind == Kind::Prime ? p : 0; }
  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p;
  }
};

// F_p.  Elements normalized to [0, p).
struct FpField {
  using Elem = int64_t;
  uint32_t p;

  explicit FpField(uint32_t prime) : p(prime) {
    (void)FieldSpec::prime(prime);  // validates
  }
  FieldSpec spec() const { return FieldSpec::prime(p); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % (long long)p;
    return r < 0 ? r + p : r;
  }
  Elem from_mpq(const mpq_class& q) const {
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    long long n = num.get_si(), d = den.get_si();
    if (d == 0) throw Error(ErrKind::BadField, "denominator divisible by p");
    return mul(from_int(n), inv(from_int(d)));
  }
  Elem add(Elem a, Elem b) const {
    Elem r = a + b;
    return r >= (Elem)p ? r - p : r;
  }
  Elem sub(Elem a, Elem b) const {
    Elem r = a - b;
    return r < 0 ? r + p : r;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : (Elem)p - a; }
  Elem mul(Elem a, Elem b) const { return (Elem)((__int128)a * b % p); }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrKind::BadField, "inverse of zero");
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
  // Uniform element, deterministic in the RNG stream.
  Elem random(Rng& rng) const { return (Elem)rng.below(p); }
};

// Q.  mpq_class keeps values canonical (reduced, positive denominator) as
// long as inputs are canonical; construction sites canonicalize explicitly.
struct QField {
  using Elem = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem((long)v); }
  Elem from_mpq(const mpq_class& q) const { return q; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error(ErrKind::BadField, "inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
  // "Small height" random coefficient: uniform integer in [-9, 9].
  Elem random(Rng& rng) const { return Elem((long)(rng.below(19)) - 9L); }

 private:
  const Elem& inv_guard(const Elem& b) const {
    if (b == 0) throw Error(ErrKind::BadField, "division by zero");
    return b;
  }
};

// Instantiates the field object matching a runtime spec; callers dispatch on
// the spec kind to pick F.
template <class F>
F field_from_spec(const FieldSpec& s);

template <>
inline FpField field_from_spec<FpField>(const FieldSpec& s) {
  if (s.kind != FieldSpec::Kind::Prime)
    throw Error(ErrKind::BadField, "prime field spec required");
  return FpField(s.p);
}

template <>
inline QField field_from_spec<QField>(const FieldSpec& s) {
  if (s.kind != FieldSpec::Kind::Rationals)
    throw Error(ErrKind::BadField, "rational field spec required");
  return QField();
}

}  // namespace detvar
