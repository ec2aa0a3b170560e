// Rank-two divisor-class lattice bookkeeping: two-ray rational cones
// (nef/effective/movable), the flop involution on the class lattice, and the
// Kodaira-dimension classifier for the canonical class.
#pragma once

#include <numeric>
#include <optional>
#include <utility>

#include "detvar/common.hpp"

namespace detvar {

using Class2 = std::pair<long long, long long>;

inline Class2 primitive_ray(Class2 v) {
  long long g = std::gcd(std::abs(v.first), std::abs(v.second));
  if (g > 1) {
    v.first /= g;
    v.second /= g;
  }
  return v;
}

inline long long cross(const Class2& a, const Class2& b) {
  return a.first * b.second - a.second * b.first;
}

// Closed convex cone spanned by two non-proportional rays.
struct RationalCone2 {
  Class2 r1, r2;

  static RationalCone2 span(Class2 a, Class2 b) {
    a = primitive_ray(a);
    b = primitive_ray(b);
    if (cross(a, b) == 0)
      throw Error(ErrKind::BadSize, "cone rays are proportional");
    if (cross(a, b) < 0) std::swap(a, b);  // store positively oriented
    return RationalCone2{a, b};
  }

  bool operator==(const RationalCone2& o) const {
    return r1 == o.r1 && r2 == o.r2;
  }

  bool contains(const Class2& v) const {
    // v = x r1 + y r2 with x,y >= 0  <=>  cross(r1,v) >= 0 and cross(v,r2) >= 0
    return cross(r1, v) >= 0 && cross(v, r2) >= 0;
  }
  bool interior(const Class2& v) const {
    return cross(r1, v) > 0 && cross(v, r2) > 0;
  }
  bool on_boundary_ray(const Class2& v) const {
    return contains(v) && !interior(v) && v != Class2{0, 0};
  }
};

// Divisor classes are written (a, b) in the basis of the two hyperplane
// pullbacks.  The nef cone is the first quadrant; the effective and movable
// cones coincide and tilt to (-1, fiber degree) on one side.
inline RationalCone2 nef_cone(long long) {
  return RationalCone2::span({1, 0}, {0, 1});
}
inline RationalCone2 effective_cone(long long b) {
  return RationalCone2::span({1, 0}, {-1, b + 1});
}
inline RationalCone2 movable_cone(long long b) { return effective_cone(b); }

// Class-lattice action of the birational involution (the flop composed with
// the double-cover symmetry): (a, c) -> (-a, a(b+1) + c).
struct Mat2 {
  long long a, b, c, d;  // row-major
  Class2 apply(const Class2& v) const {
    return {a * v.first + b * v.second, c * v.first + d * v.second};
  }
  Mat2 mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

inline Mat2 involution_matrix(long long b) { return Mat2{-1, 0, b + 1, 1}; }

// The involution must square to the identity and exchange the extreme rays of
// the effective cone while preserving the cone itself.
inline bool involution_respects_cones(long long b) {
  auto m = involution_matrix(b);
  if (!m.mul(m).is_identity()) return false;
  auto eff = effective_cone(b);
  auto i1 = primitive_ray(m.apply(eff.r1));
  auto i2 = primitive_ray(m.apply(eff.r2));
  return (i1 == eff.r2 && i2 == eff.r1) &&
         RationalCone2::span(i1, i2) == eff;
}

// Adjunction for a (2,b+1) divisor in P^1 x P^3: K = (-2+2, -4+b+1).
inline Class2 canonical_class(long long b) { return {0, b - 3}; }

// Kodaira dimension from the position of the canonical class in the
// effective cone: empty (outside) -> minus infinity (nullopt), zero class
// -> 0, interior (big) -> 3 for a threefold.
inline std::optional<long long> kodaira_dimension(long long b) {
  Class2 k = canonical_class(b);
  auto eff = effective_cone(b);
  if (k == Class2{0, 0}) return 0;
  if (!eff.contains(k)) return std::nullopt;
  if (eff.interior(k)) return 3;
  throw Error(ErrKind::BadSize,
              "canonical class on a boundary ray: unclassified");
}

}  // namespace detvar
