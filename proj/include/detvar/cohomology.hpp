// Sheaf cohomology of line bundles by integer arithmetic alone: the standard
// formulas on projective space, Kunneth products, the long-exact-sequence
// bookkeeping for divisors in a product of projective spaces (entries can
// come out undetermined when two unknown maps compete), Euler characteristics
// of the threefolds under study, and small power-series checks for Chern-class
// identities.
#pragma once

#include <string>
#include <vector>

#include "detvar/common.hpp"

namespace detvar {

// h^0..h^top with per-entry determination flags; chi is always exact.
struct CohomologyVector {
  std::vector<long long> h;
  std::vector<bool> known;
  long long chi = 0;

  bool all_known() const {
    for (bool b : known)
      if (!b) return false;
    return true;
  }
  long long top() const { return (long long)h.size() - 1; }
};

inline CohomologyVector make_known(std::vector<long long> h) {
  CohomologyVector v;
  v.known.assign(h.size(), true);
  long long chi = 0;
  for (size_t i = 0; i < h.size(); ++i) chi += (i % 2 ? -1 : 1) * h[i];
  v.h = std::move(h);
  v.chi = chi;
  return v;
}

// Cohomology of O(d) on P^n: only h^0 (d >= 0) or h^n (d <= -n-1) can be
// nonzero.
inline CohomologyVector bott_line(long long n, long long d) {
  std::vector<long long> h((size_t)n + 1, 0);
  if (d >= 0) h[0] = binom(n + d, n);
  if (-d - n - 1 >= 0) h[(size_t)n] = binom(-d - 1, n);
  return make_known(std::move(h));
}

inline CohomologyVector kunneth(const CohomologyVector& a,
                                const CohomologyVector& b) {
  std::vector<long long> h(a.h.size() + b.h.size() - 1, 0);
  for (size_t p = 0; p < a.h.size(); ++p)
    for (size_t q = 0; q < b.h.size(); ++q) h[p + q] += a.h[p] * b.h[q];
  return make_known(std::move(h));
}

// O(a,c) on P^1 x P^3.
inline CohomologyVector line_bundle_p1p3(long long a, long long c) {
  return kunneth(bott_line(1, a), bott_line(3, c));
}

// O(a,c) on P^2 x P^3.
inline CohomologyVector line_bundle_p2p3(long long a, long long c) {
  return kunneth(bott_line(2, a), bott_line(3, c));
}

// Cohomology of O(alpha,beta) restricted to a divisor of class (2, b+1) in
// P^1 x P^3, from 0 -> O(alpha-2, beta-b-1) -> O(alpha, beta) -> O_D -> 0.
// An entry h^i is pinned down exactly when, in
//   H^i(ideal) -> H^i(ambient) -> H^i(D) -> H^{i+1}(ideal) -> H^{i+1}(ambient),
// the cokernel contribution and the kernel contribution are each forced
// (one of the two groups around each unknown map vanishes); the flag is
// cleared otherwise.  chi is exact regardless.
inline CohomologyVector divisor_cohomology_p1p3(long long b, long long alpha,
                                                long long beta) {
  auto ideal = line_bundle_p1p3(alpha - 2, beta - b - 1);
  auto amb = line_bundle_p1p3(alpha, beta);
  CohomologyVector out;
  out.h.assign(4, 0);  // the divisor is a threefold
  out.known.assign(4, false);
  for (size_t i = 0; i < 4; ++i) {
    bool coker_ok = ideal.h[i] == 0 || amb.h[i] == 0;
    bool ker_ok = ideal.h[i + 1] == 0 || amb.h[i + 1] == 0;
    if (coker_ok && ker_ok) {
      out.known[i] = true;
      out.h[i] = (ideal.h[i] == 0 ? amb.h[i] : 0) +
                 (amb.h[i + 1] == 0 ? ideal.h[i + 1] : 0);
    }
  }
  out.chi = amb.chi - ideal.chi;
  return out;
}

// chi of O(a,c) on P^2 x P^3 (valid for all integers via the binomial
// extension).
inline long long chi_p2p3(long long a, long long c) {
  return binom(a + 2, 2) * binom(c + 3, 3);
}

// Euler characteristic of O(alpha,beta) on the determinantal threefold with
// parameter b inside P^2 x P^3, via the additivity of chi along its
// resolution by ambient line bundles.
inline long long euler_char_threefold(long long b, long long alpha,
                                      long long beta) {
  return chi_p2p3(alpha, beta - b - 1) + chi_p2p3(alpha, beta) -
         3 * chi_p2p3(alpha - 1, beta - b - 1) - chi_p2p3(alpha - 1, beta - 2) +
         2 * chi_p2p3(alpha - 2, beta - b - 2);
}

// h^0 of O(0,beta) on the threefold via its double-cover pushforward
// splitting O + O(-b-1) on P^3.  Section counts truncate at zero, unlike
// the polynomial extension used for chi.
inline long long h0_vertical_via_pushforward(long long b, long long beta) {
  auto h0_p3 = [](long long d) { return d >= 0 ? binom(d + 3, 3) : 0; };
  return h0_p3(beta) + h0_p3(beta - b - 1);
}

// chi of O(a,c) on P^1 x P^3.
inline long long chi_p1p3(long long a, long long c) {
  return (a + 1) * binom(c + 3, 3);
}

// Euler characteristic of O(alpha,beta) restricted to the (2,b+1)
// hypersurface model in P^1 x P^3, from its ideal-sheaf sequence.
inline long long euler_char_hypersurface(long long b, long long alpha,
                                         long long beta) {
  return chi_p1p3(alpha, beta) - chi_p1p3(alpha - 2, beta - b - 1);
}

// The birational involution of the hypersurface model acts on twists by
// (alpha, beta) -> (-alpha, alpha*(b+1) + beta).  chi is not invariant:
// Riemann-Roch across the (b+1)^3 flopped rational curves shifts it by a
// cubic in alpha.  h^0 of effective classes, by contrast, is preserved,
// since the two models agree in codimension one.
inline long long flop_chi_defect(long long b, long long alpha) {
  long long nodes = (b + 1) * (b + 1) * (b + 1);
  return -nodes * alpha * (alpha * alpha - 1) / 6;
}

// ---------------------------------------------------------------------------
// Power-series checks over the integers.

// Truncated quotient num/den in Z[[t]]; den must start with a unit.
inline std::vector<long long> series_quotient(std::vector<long long> num,
                                              const std::vector<long long>& den,
                                              size_t order) {
  if (den.empty() || (den[0] != 1 && den[0] != -1))
    throw Error(ErrKind::BadSize, "series division needs a unit constant");
  num.resize(std::max(num.size(), order), 0);
  std::vector<long long> q(order, 0);
  for (size_t k = 0; k < order; ++k) {
    long long acc = num[k];
    for (size_t j = 0; j < k; ++j)
      if (k - j < den.size()) acc -= q[j] * den[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

// binomial expansion of (1+t)^n
inline std::vector<long long> binomial_series(long long n, size_t order) {
  std::vector<long long> out(order, 0);
  for (size_t k = 0; k < order; ++k) out[k] = binom(n, (long long)k);
  return out;
}

// (1+t)^4/(1+2t) = 1 + 2t + 2t^2 mod t^3: total Chern class of the rank-2
// quotient bundle on P^3, so c_2 = 2.
inline bool chern_quotient_rank2_p3() {
  auto q = series_quotient(binomial_series(4, 3), {1, 2}, 3);
  return q == std::vector<long long>{1, 2, 2};
}

// Control: (1+t)^3/(1+t) = 1 + 2t + t^2 (the rank-2 quotient on P^2).
inline bool chern_quotient_rank2_p2() {
  auto q = series_quotient(binomial_series(3, 3), {1, 1}, 3);
  return q == std::vector<long long>{1, 2, 1};
}

// ---------------------------------------------------------------------------
// Rendering.

// Formats a cohomology vector as a polynomial in h (descending powers),
// "0" when trivial, "?" when some entry is undetermined.
inline std::string h_poly_string(const CohomologyVector& v) {
  if (!v.all_known()) return "?";
  std::string out;
  for (long long i = v.top(); i >= 0; --i) {
    long long c = v.h[(size_t)i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    std::string mono = i == 0 ? "" : i == 1 ? "h" : "h^" + std::to_string(i);
    if (c == 1 && i > 0)
      out += mono;
    else
      out += std::to_string(c) + (mono.empty() ? "" : mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detvar
