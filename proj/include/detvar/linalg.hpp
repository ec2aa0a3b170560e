// Dense linear algebra over a coefficient field (row reduction, rank,
// nullspace vectors) and univariate polynomial utilities (gcd, squarefree
// part).  Sizes here are small; everything is plain Gaussian elimination.
#pragma once

#include <optional>
#include <vector>

#include "detvar/field.hpp"

namespace detvar {

template <class F>
struct DenseMatrix {
  using Elem = typename F::Elem;
  size_t rows = 0, cols = 0;
  std::vector<Elem> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(const F& k, size_t r, size_t c)
      : rows(r), cols(c), a(r * c, k.zero()) {}
  Elem& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Elem& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// In-place forward elimination; returns rank.  Deterministic pivoting: first
// nonzero entry in column order.
template <class F>
size_t row_reduce(const F& k, DenseMatrix<F>& m) {
  size_t rank = 0;
  for (size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    size_t piv = rank;
    while (piv < m.rows && k.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(rank, j));
    auto inv = k.inv(m.at(rank, c));
    for (size_t j = c; j < m.cols; ++j)
      m.at(rank, j) = k.mul(m.at(rank, j), inv);
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == rank || k.is_zero(m.at(r, c))) continue;
      auto f = m.at(r, c);
      for (size_t j = c; j < m.cols; ++j)
        m.at(r, j) = k.sub(m.at(r, j), k.mul(f, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

template <class F>
size_t matrix_rank(const F& k, DenseMatrix<F> m) {
  return row_reduce(k, m);
}

// Incremental linear-dependence tester: feed vectors one at a time; as soon
// as the newest vector v_n depends on the earlier ones, returns coefficients
// c_0..c_{n-1} with v_n = c_0 v_0 + .. + c_{n-1} v_{n-1}.  Maintains a fully
// reduced echelon basis plus, per row, its combination of the input vectors.
template <class F>
class DependenceTracker {
 public:
  using Elem = typename F::Elem;
  DependenceTracker(const F& k, size_t dim) : k_(k), dim_(dim) {}

  std::optional<std::vector<Elem>> insert(std::vector<Elem> v) {
    if (v.size() != dim_)
      throw Error(ErrKind::BadSize, "dependence tracker: wrong vector length");
    std::vector<Elem> rec(rows_.size(), k_.zero());
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto c = v[pivot_[i]];
      if (k_.is_zero(c)) continue;
      rec[i] = c;
      for (size_t j = 0; j < dim_; ++j)
        v[j] = k_.sub(v[j], k_.mul(c, rows_[i][j]));
    }
    size_t p = 0;
    while (p < dim_ && k_.is_zero(v[p])) ++p;
    if (p == dim_) {
      std::vector<Elem> out(count_, k_.zero());
      for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < count_; ++j)
          out[j] = k_.add(out[j], k_.mul(rec[i], history_[i][j]));
      return out;
    }
    auto inv = k_.inv(v[p]);
    for (size_t j = 0; j < dim_; ++j) v[j] = k_.mul(v[j], inv);
    std::vector<Elem> h(count_ + 1, k_.zero());
    h[count_] = inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto c = k_.mul(rec[i], inv);
      for (size_t j = 0; j < history_[i].size(); ++j)
        h[j] = k_.sub(h[j], k_.mul(c, history_[i][j]));
    }
    for (auto& row : history_) row.resize(count_ + 1, k_.zero());
    // keep earlier rows reduced at the new pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto c = rows_[i][p];
      if (k_.is_zero(c)) continue;
      for (size_t j = 0; j < dim_; ++j)
        rows_[i][j] = k_.sub(rows_[i][j], k_.mul(c, v[j]));
      for (size_t j = 0; j <= count_; ++j)
        history_[i][j] = k_.sub(history_[i][j], k_.mul(c, h[j]));
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(p);
    history_.push_back(std::move(h));
    ++count_;
    return std::nullopt;
  }

  size_t size() const { return count_; }

 private:
  F k_;
  size_t dim_;
  size_t count_ = 0;  // number of input vectors accepted so far
  std::vector<std::vector<Elem>> rows_;     // reduced echelon rows
  std::vector<size_t> pivot_;               // leading column of each row
  std::vector<std::vector<Elem>> history_;  // row = combination of inputs
};

// ---------------------------------------------------------------------------
// Univariate polynomials, coefficients ascending.

template <class F>
struct UniPoly {
  using Elem = typename F::Elem;
  std::vector<Elem> c;

  static UniPoly trim(const F& k, std::vector<Elem> v) {
    while (!v.empty() && k.is_zero(v.back())) v.pop_back();
    return UniPoly{std::move(v)};
  }
  bool is_zero() const { return c.empty(); }
  long long degree() const { return (long long)c.size() - 1; }
};

template <class F>
UniPoly<F> uni_monic(const F& k, UniPoly<F> p) {
  if (p.is_zero()) return p;
  auto inv = k.inv(p.c.back());
  for (auto& x : p.c) x = k.mul(x, inv);
  return p;
}

template <class F>
UniPoly<F> uni_derivative(const F& k, const UniPoly<F>& p) {
  std::vector<typename F::Elem> d;
  for (size_t i = 1; i < p.c.size(); ++i)
    d.push_back(k.mul(p.c[i], k.from_int((long long)i)));
  return UniPoly<F>::trim(k, std::move(d));
}

// remainder of a by b (b nonzero)
template <class F>
UniPoly<F> uni_mod(const F& k, UniPoly<F> a, const UniPoly<F>& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    auto f = k.div(a.c.back(), b.c.back());
    size_t shift = a.c.size() - b.c.size();
    for (size_t i = 0; i < b.c.size(); ++i)
      a.c[i + shift] = k.sub(a.c[i + shift], k.mul(f, b.c[i]));
    a = UniPoly<F>::trim(k, std::move(a.c));
  }
  return a;
}

// exact quotient a / b; requires zero remainder
template <class F>
UniPoly<F> uni_div_exact(const F& k, UniPoly<F> a, const UniPoly<F>& b) {
  std::vector<typename F::Elem> q(
      a.degree() >= b.degree() ? (size_t)(a.degree() - b.degree() + 1) : 0,
      k.zero());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    auto f = k.div(a.c.back(), b.c.back());
    size_t shift = a.c.size() - b.c.size();
    q[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i)
      a.c[i + shift] = k.sub(a.c[i + shift], k.mul(f, b.c[i]));
    a = UniPoly<F>::trim(k, std::move(a.c));
  }
  if (!a.is_zero())
    throw Error(ErrKind::ZeroIdealDivisor, "inexact univariate division");
  return UniPoly<F>::trim(k, std::move(q));
}

template <class F>
UniPoly<F> uni_gcd(const F& k, UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = uni_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(k, std::move(a));
}

// p / gcd(p, p'): same roots, multiplicity one.  Requires characteristic 0 or
// characteristic > deg p (guards against inseparability artifacts).
template <class F>
UniPoly<F> uni_squarefree_part(const F& k, const UniPoly<F>& p) {
  if (p.is_zero() || p.degree() == 0) return uni_monic(k, p);
  auto g = uni_gcd(k, p, uni_derivative(k, p));
  return uni_monic(k, uni_div_exact(k, p, g));
}

template <class F>
bool uni_is_squarefree(const F& k, const UniPoly<F>& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return uni_gcd(k, p, uni_derivative(k, p)).degree() == 0;
}

}  // namespace detvar
