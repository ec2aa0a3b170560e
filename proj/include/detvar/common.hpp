// Shared error type, deterministic RNG and small utilities used across the
// detvar kernel.
#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace detvar {

// Every failure mode of the kernel is reported through Error with a stable
// machine-readable kind.  The CLI maps kinds to exit codes.
enum class ErrKind {
  BadField,
  BadCharacteristic,
  BadSize,
  DegreeBoundExceeded,
  DegenerateParameters,
  EmptyDegree,
  InhomogeneousInput,
  LengthExceeded,
  NonPositiveGrading,
  NotAlternating,
  NotQuadratic,
  ParseError,
  RetrySeed,
  RingMismatch,
  SaturationDiverged,
  UnknownVariable,
  ZeroIdealDivisor,
};

inline const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::BadField: return "BadField";
    case ErrKind::BadCharacteristic: return "BadCharacteristic";
    case ErrKind::BadSize: return "BadSize";
    case ErrKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrKind::DegenerateParameters: return "DegenerateParameters";
    case ErrKind::EmptyDegree: return "EmptyDegree";
    case ErrKind::InhomogeneousInput: return "InhomogeneousInput";
    case ErrKind::LengthExceeded: return "LengthExceeded";
    case ErrKind::NonPositiveGrading: return "NonPositiveGrading";
    case ErrKind::NotAlternating: return "NotAlternating";
    case ErrKind::NotQuadratic: return "NotQuadratic";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::RetrySeed: return "RetrySeed";
    case ErrKind::RingMismatch: return "RingMismatch";
    case ErrKind::SaturationDiverged: return "SaturationDiverged";
    case ErrKind::UnknownVariable: return "UnknownVariable";
    case ErrKind::ZeroIdealDivisor: return "ZeroIdealDivisor";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& what)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

// Parse errors carry a source position (1-based line and column).
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& what)
      : Error(ErrKind::ParseError, "line " + std::to_string(line) + ", col " +
                                       std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// SplitMix64: tiny deterministic PRNG.  We roll our own instead of using
// <random> distributions because libstdc++/libc++ do not guarantee identical
// streams, and reproducibility across toolchains is part of the contract.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform value in [0, n).  The modulo bias is < 2^-32 for the moduli used
  // here (all < 2^31) and keeps the stream platform-independent.
  uint64_t below(uint64_t n) { return next() % n; }
  // Derive an independent stream; used to give each random object its own
  // reproducible source regardless of evaluation order.
  static uint64_t mix(uint64_t seed, uint64_t salt) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL * (salt + 1)));
    return r.next();
  }
};

// Exact binomial coefficient C(n, k) for possibly negative n (the convention
// used by Euler characteristics of twisted line bundles): C(n, k) =
// n(n-1)...(n-k+1)/k!.  Values stay far below 2^63 for every degree range the
// kernel touches.
inline long long binom(long long n, long long k) {
  if (k < 0) return 0;
  long long num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
    long long g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace detvar
