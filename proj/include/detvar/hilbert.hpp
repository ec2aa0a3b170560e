// Hilbert-series data for homogeneous ideals: numerator by pivot splitting on
// the leading-term ideal, Krull dimension of monomial ideals by minimum
// hitting sets, degree and arithmetic genus, graded-slice dimensions both by
// counting standard monomials and by generator-span rank, and a certificate
// for zero-dimensional projective schemes (length, reducedness, support size)
// based on minimal polynomials in the artinian quotient.
#pragma once

#include <algorithm>
#include <map>
#include <optional>

#include "detvar/ideal.hpp"
#include "detvar/linalg.hpp"

namespace detvar {

struct HilbertData {
  long long affine_dim = 0;  // Krull dimension of the affine cone
  long long proj_dim = 0;    // affine_dim - 1, floored at -1
  long long degree = 0;
  std::optional<long long> genus;  // only for proj_dim == 1
};

struct ZeroDimCert {
  bool finite = false;
  long long length = 0;       // projective degree = vector-space length
  bool reduced = false;       // some linear form has squarefree minimal
                              // polynomial of full degree
  long long support_degree = 0;  // number of distinct points (best separation)
};

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  std::vector<Monomial> out;
  for (const auto& m : v) {
    bool redundant = false;
    for (const auto& kept : out)
      if (mono_divides(kept, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

// dense univariate integer polynomials, index = degree
using ZPoly = std::vector<long long>;

inline void zp_mul_one_minus_tk(ZPoly& p, size_t k) {
  ZPoly out(p.size() + k, 0);
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + k] -= p[i];
  }
  p = std::move(out);
}

inline void zp_add_scaled(ZPoly& a, const ZPoly& b, size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

// Numerator of the Hilbert series of R/(monomial ideal) over the coarse
// grading: HS(t) = N(t) / prod_i (1 - t^{w_i}).
inline ZPoly hilbert_numerator(std::vector<Monomial> gens,
                               const std::vector<long long>& weights) {
  gens = minimalize_monomials(std::move(gens));
  for (const auto& g : gens)
    if (g.is_unit()) return ZPoly{};  // unit ideal: numerator 0
  if (gens.empty()) return ZPoly{1};
  // base case: pairwise-coprime pure powers
  bool pure = true;
  for (const auto& g : gens) {
    int support = 0;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (g.e[i]) ++support;
    if (support != 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    ZPoly n{1};
    for (const auto& g : gens)
      for (size_t i = 0; i < kMaxVars; ++i)
        if (g.e[i]) zp_mul_one_minus_tk(n, (size_t)(g.e[i] * weights[i]));
    return n;
  }
  // pivot: the variable hitting the most mixed (support >= 2) generators,
  // with its smallest exponent among those.  Restricting to mixed
  // generators keeps v^a outside the ideal (a surviving pure power v^c has
  // c > every mixed v-exponent), so both branches strictly shrink.
  auto mixed = [&](const Monomial& g) {
    int support = 0;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (g.e[i]) ++support;
    return support >= 2;
  };
  size_t best_v = 0, best_count = 0;
  for (size_t v = 0; v < weights.size(); ++v) {
    size_t count = 0;
    for (const auto& g : gens)
      if (g.e[v] && mixed(g)) ++count;
    if (count > best_count) {
      best_count = count;
      best_v = v;
    }
  }
  uint16_t a = 0;
  for (const auto& g : gens)
    if (g.e[best_v] && mixed(g) && (a == 0 || g.e[best_v] < a))
      a = g.e[best_v];
  // I = (I + (v^a)) sharing, plus t^{deg v^a} * (I : v^a)
  std::vector<Monomial> sum = gens;
  sum.push_back(Monomial::var(best_v, a));
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial m = g;
    uint16_t drop = std::min<uint16_t>(a, m.e[best_v]);
    m.e[best_v] = (uint16_t)(m.e[best_v] - drop);
    m.deg -= drop;
    colon.push_back(m);
  }
  ZPoly n = hilbert_numerator(std::move(sum), weights);
  ZPoly c = hilbert_numerator(std::move(colon), weights);
  zp_add_scaled(n, c, (size_t)(a * weights[best_v]));
  return n;
}

// minimum hitting set of the generator supports; INT_MAX/2 when unhittable
inline long long min_hitting_set(const std::vector<Monomial>& gens,
                                 size_t nvars) {
  if (gens.empty()) return 0;
  // choose a generator with the smallest support
  size_t pick = 0, pick_supp = kMaxVars + 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    size_t s = 0;
    for (size_t v = 0; v < nvars; ++v)
      if (gens[i].e[v]) ++s;
    if (s < pick_supp) {
      pick_supp = s;
      pick = i;
    }
  }
  long long best = 1 << 29;
  for (size_t v = 0; v < nvars; ++v) {
    if (!gens[pick].e[v]) continue;
    std::vector<Monomial> rest;
    for (const auto& g : gens)
      if (!g.e[v]) rest.push_back(g);
    best = std::min(best, 1 + min_hitting_set(rest, nvars));
  }
  return best;
}

// Krull dimension of R/(monomial ideal); -1 for the unit ideal.
inline long long monomial_affine_dim(const std::vector<Monomial>& raw,
                                     size_t nvars) {
  auto gens = minimalize_monomials(raw);
  for (const auto& g : gens)
    if (g.is_unit()) return -1;
  return (long long)nvars - min_hitting_set(gens, nvars);
}

// exact division by (1-t)^e; requires exactness
inline ZPoly zp_div_one_minus_t(ZPoly p, size_t e) {
  for (size_t round = 0; round < e; ++round) {
    long long carry = 0;
    for (auto& c : p) {
      c += carry;
      carry = c;
    }
    if (carry != 0)
      throw Error(ErrKind::BadSize, "inexact division by 1-t");
    if (!p.empty()) p.pop_back();
  }
  return p;
}

template <class F>
std::vector<Monomial> leading_monomials(const GroebnerBasis<F>& gb) {
  std::vector<Monomial> out;
  Divider<F> d(gb.ring, gb.order);
  for (const auto& g : gb.gens) out.push_back(d.sorted(g)[0].m);
  return out;
}

}  // namespace detail

// Dimension, degree and (for curves) arithmetic genus of a homogeneous ideal.
// Supports the standard coarse grading only (every variable of weight one).
// Krull dimension of the affine cone of R/I from the leading-term ideal;
// valid for any grading (unlike the series-based data below).
template <class F>
long long krull_affine_dim(const Ideal<F>& I) {
  auto lts = detail::leading_monomials(I.groebner());
  return detail::monomial_affine_dim(lts, I.ring()->nvars());
}

template <class F>
HilbertData hilbert_data(const Ideal<F>& I) {
  const auto& ring = I.ring();
  std::vector<long long> weights;
  for (size_t i = 0; i < (size_t)ring->nvars(); ++i) {
    weights.push_back(ring->coarse_weight(i));
    if (weights.back() != 1)
      throw Error(ErrKind::NonPositiveGrading,
                  "hilbert_data requires weight-one variables");
  }
  auto lts = detail::leading_monomials(I.groebner());
  HilbertData out;
  out.affine_dim = detail::monomial_affine_dim(lts, ring->nvars());
  out.proj_dim = out.affine_dim <= 0 ? -1 : out.affine_dim - 1;
  if (out.affine_dim < 0) {
    out.degree = 0;
    return out;
  }
  auto n = detail::hilbert_numerator(lts, weights);
  auto reduced =
      detail::zp_div_one_minus_t(n, ring->nvars() - (size_t)out.affine_dim);
  long long deg = 0;
  for (long long c : reduced) deg += c;
  out.degree = deg;
  if (out.proj_dim == 1) {
    // Hilbert polynomial at 0: HP(d) = sum_j q_j * binom(d - j + m - 1, m - 1)
    long long m = out.affine_dim;
    long long hp0 = 0;
    for (size_t j = 0; j < reduced.size(); ++j)
      hp0 += reduced[j] * binom(-(long long)j + m - 1, m - 1);
    out.genus = 1 - hp0;
  }
  return out;
}

// Number of monomials of the given multidegree outside the leading-term ideal.
template <class F>
long long standard_monomial_count(const Ideal<F>& I, const Multidegree& d) {
  auto lts = detail::leading_monomials(I.groebner());
  long long count = 0;
  for (const auto& m : monomials_of_degree(I.ring(), d)) {
    bool in = false;
    for (const auto& l : lts)
      if (mono_divides(l, m)) {
        in = true;
        break;
      }
    if (!in) ++count;
  }
  return count;
}

// Dimension of the degree-d slice of R/I computed directly from the
// generators by linear algebra: dim R_d minus the rank of the span of
// { m * g : g generator, m monomial of degree d - deg g }.  Independent of
// any Groebner basis.
template <class F>
long long hilbert_slice_dim(const Ideal<F>& I, const Multidegree& d) {
  const auto& ring = I.ring();
  const F& k = ring->field;
  auto target = monomials_of_degree(ring, d);
  std::map<Monomial, size_t> index;
  for (size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& g : I.gens()) {
    auto dg = g.required_degree();
    Multidegree shift = deg_sub(d, dg);
    bool neg = false;
    for (long long c : shift)
      if (c < 0) neg = true;
    if (neg) continue;
    std::vector<Monomial> mults;
    try {
      mults = monomials_of_degree(ring, shift);
    } catch (const Error& e) {
      if (e.kind() == ErrKind::EmptyDegree) continue;
      throw;
    }
    for (const auto& m : mults) {
      std::vector<typename F::Elem> row(target.size(), k.zero());
      for (const auto& t : g.terms()) row[index.at(mono_mul(t.m, m))] = t.c;
      rows.push_back(std::move(row));
    }
  }
  DenseMatrix<F> mat(k, rows.size(), target.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < target.size(); ++c) mat.at(r, c) = rows[r][c];
  return (long long)target.size() - (long long)row_reduce(k, mat);
}

namespace detail {

// Standard monomials of an artinian monomial ideal (all of them).
inline std::optional<std::vector<Monomial>> artinian_standard_monomials(
    const std::vector<Monomial>& raw, size_t nvars) {
  auto gens = minimalize_monomials(raw);
  std::vector<uint16_t> bound(nvars, 0);
  for (const auto& g : gens) {
    int supp = 0;
    size_t v = 0;
    for (size_t i = 0; i < nvars; ++i)
      if (g.e[i]) {
        ++supp;
        v = i;
      }
    if (supp == 1) bound[v] = g.e[v];
  }
  for (size_t v = 0; v < nvars; ++v)
    if (!bound[v]) return std::nullopt;  // no pure power: infinite quotient
  std::vector<Monomial> out;
  Monomial cur = Monomial::unit();
  // iterate the box of exponents below the pure-power bounds
  while (true) {
    bool divisible = false;
    for (const auto& g : gens)
      if (mono_divides(g, cur)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(cur);
    size_t v = 0;
    while (v < nvars) {
      if (cur.e[v] + 1 < bound[v]) {
        cur.e[v]++;
        cur.deg++;
        break;
      }
      cur.deg -= cur.e[v];
      cur.e[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Certificate for a homogeneous ideal cutting out finitely many projective
// points: length (= degree), reducedness, and the number of distinct points.
// Reducedness is witnessed by a random linear form whose minimal polynomial
// in the artinian quotient (after a random coordinate change and
// dehomogenization) is squarefree of degree equal to the length; the
// number of distinct points is the degree of the squarefree part under the
// best separating form found.  Seeded and deterministic.
template <class F>
ZeroDimCert zero_dim_certificate(const Ideal<F>& I, uint64_t seed) {
  ZeroDimCert cert;
  auto hd = hilbert_data(I);
  if (hd.affine_dim > 1) return cert;  // not finite
  cert.finite = true;
  if (hd.affine_dim < 1) {  // empty projective scheme
    cert.reduced = true;
    return cert;
  }
  cert.length = hd.degree;
  const auto& ring = I.ring();
  const F& k = ring->field;
  size_t n = ring->nvars();
  std::vector<std::string> affine_vars(ring->vars.begin(),
                                       ring->vars.end() - 1);
  auto affine = ring_standard(k, affine_vars);

  GBOptions deep = I.options();
  deep.degree_cap = std::max<long long>(deep.degree_cap, 4 * cert.length + 40);

  Rng rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    // random invertible change of coordinates
    DenseMatrix<F> M(k, n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) M.at(r, c) = k.random(rng);
    if (matrix_rank(k, M) != n) continue;
    // x_r -> sum_c M(r,c) * x_c, then set the last variable to 1
    std::vector<Polynomial<F>> images;
    for (size_t r = 0; r < n; ++r) {
      auto img = Polynomial<F>::zero(affine);
      for (size_t c = 0; c < n; ++c) {
        auto mono = c + 1 < n ? Polynomial<F>::variable(affine, c, 1)
                              : Polynomial<F>::from_int(affine, 1);
        img = img + mono.scaled(M.at(r, c));
      }
      images.push_back(img);
    }
    std::vector<Polynomial<F>> agens;
    for (const auto& g : I.gens()) agens.push_back(g.substitute(affine, images));
    Ideal<F> J(affine, agens, deep);
    const auto& gb = J.groebner();
    auto basis = detail::artinian_standard_monomials(
        detail::leading_monomials(gb), affine->nvars());
    if (!basis || (long long)basis->size() != cert.length)
      continue;  // hyperplane at infinity met the points; try another change
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < basis->size(); ++i) index.emplace((*basis)[i], i);

    Divider<F> div(affine, affine->default_order);
    for (const auto& g : gb.gens) div.add_divisor(g);

    for (int form_try = 0; form_try < 5; ++form_try) {
      auto ell = Polynomial<F>::zero(affine);
      for (size_t v = 0; v < (size_t)affine->nvars(); ++v)
        ell = ell +
              Polynomial<F>::variable(affine, v, 1).scaled(k.random(rng));
      // minimal polynomial of ell by iterated normal forms
      DependenceTracker<F> dep(k, basis->size());
      auto cur = Polynomial<F>::from_int(affine, 1);
      std::vector<typename F::Elem> minpoly;  // ascending, monic
      while (true) {
        std::vector<typename F::Elem> vec(basis->size(), k.zero());
        for (const auto& t : cur.terms()) vec[index.at(t.m)] = t.c;
        auto recur = dep.insert(std::move(vec));
        if (recur) {
          minpoly = std::move(*recur);
          for (auto& c : minpoly) c = k.neg(c);
          minpoly.push_back(k.one());
          break;
        }
        cur = div.to_poly(div.reduce(div.sorted(cur * ell)));
      }
      UniPoly<F> p = UniPoly<F>::trim(k, minpoly);
      auto sqf = uni_squarefree_part(k, p);
      cert.support_degree = std::max(cert.support_degree, sqf.degree());
      if (p.degree() == cert.length && sqf.degree() == p.degree()) {
        cert.reduced = true;
        return cert;
      }
    }
    return cert;  // quotient basis was good; forms exhausted
  }
  throw Error(ErrKind::RetrySeed,
              "no usable coordinate change found for this seed");
}

}  // namespace detvar
