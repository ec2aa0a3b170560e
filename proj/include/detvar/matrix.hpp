// Matrices over a polynomial ring: graded twists, products, determinants and
// minors (memoized Laplace expansion), Pfaffians of alternating matrices,
// Hessians, Jacobian matrices, and Koszul differentials.
#pragma once

#include <functional>
#include <map>

#include "detvar/ideal.hpp"

namespace detvar {

template <class F>
struct PolyMatrix {
  RingPtr<F> ring;
  size_t rows = 0, cols = 0;
  std::vector<Polynomial<F>> entries;   // row-major
  std::vector<Multidegree> row_twists;  // optional grading data
  std::vector<Multidegree> col_twists;  // entry degree = col - row twist

  Polynomial<F>& at(size_t r, size_t c) { return entries[r * cols + c]; }
  const Polynomial<F>& at(size_t r, size_t c) const {
    return entries[r * cols + c];
  }
  bool graded() const { return !row_twists.empty(); }
};

template <class F>
PolyMatrix<F> poly_matrix(const RingPtr<F>& ring,
                          std::vector<std::vector<Polynomial<F>>> rows) {
  PolyMatrix<F> m;
  m.ring = ring;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != m.cols)
      throw Error(ErrKind::BadSize, "ragged matrix rows");
    for (const auto& e : r) {
      check_same_ring(e.ring(), ring);
      m.entries.push_back(e);
    }
  }
  return m;
}

// Checks each entry is zero or homogeneous of degree col_twist - row_twist.
template <class F>
void validate_graded(const PolyMatrix<F>& m) {
  if (m.row_twists.size() != m.rows || m.col_twists.size() != m.cols)
    throw Error(ErrKind::BadSize, "twist lists do not match matrix shape");
  for (size_t r = 0; r < m.rows; ++r)
    for (size_t c = 0; c < m.cols; ++c) {
      const auto& e = m.at(r, c);
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree();
      if (!d || *d != deg_sub(m.col_twists[c], m.row_twists[r]))
        throw Error(ErrKind::InhomogeneousInput,
                    "matrix entry (" + std::to_string(r) + "," +
                        std::to_string(c) + ") has wrong degree");
    }
}

// Derives column twists from entries given row twists; columns of zeros are
// not allowed (their twist would be ambiguous).
template <class F>
void derive_col_twists(PolyMatrix<F>& m, std::vector<Multidegree> row_twists) {
  m.row_twists = std::move(row_twists);
  m.col_twists.clear();
  for (size_t c = 0; c < m.cols; ++c) {
    std::optional<Multidegree> twist;
    for (size_t r = 0; r < m.rows; ++r) {
      const auto& e = m.at(r, c);
      if (e.is_zero()) continue;
      twist = deg_add(e.required_degree(), m.row_twists[r]);
      break;
    }
    if (!twist)
      throw Error(ErrKind::EmptyDegree,
                  "cannot derive twist of zero column " + std::to_string(c));
    m.col_twists.push_back(std::move(*twist));
  }
  validate_graded(m);
}

template <class F>
PolyMatrix<F> mat_transpose(const PolyMatrix<F>& m) {
  PolyMatrix<F> t;
  t.ring = m.ring;
  t.rows = m.cols;
  t.cols = m.rows;
  for (size_t c = 0; c < m.cols; ++c)
    for (size_t r = 0; r < m.rows; ++r) t.entries.push_back(m.at(r, c));
  if (m.graded()) {
    for (const auto& d : m.col_twists) t.row_twists.push_back(deg_neg(d));
    for (const auto& d : m.row_twists) t.col_twists.push_back(deg_neg(d));
  }
  return t;
}

template <class F>
PolyMatrix<F> mat_mul(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
  check_same_ring(a.ring, b.ring);
  if (a.cols != b.rows)
    throw Error(ErrKind::BadSize, "matrix product shape mismatch");
  PolyMatrix<F> m;
  m.ring = a.ring;
  m.rows = a.rows;
  m.cols = b.cols;
  for (size_t r = 0; r < a.rows; ++r)
    for (size_t c = 0; c < b.cols; ++c) {
      auto acc = Polynomial<F>::zero(a.ring);
      for (size_t k = 0; k < a.cols; ++k) acc = acc + a.at(r, k) * b.at(k, c);
      m.entries.push_back(std::move(acc));
    }
  return m;
}

template <class F>
std::vector<Polynomial<F>> mat_apply(const PolyMatrix<F>& a,
                                     const std::vector<Polynomial<F>>& v) {
  if (a.cols != v.size())
    throw Error(ErrKind::BadSize, "matrix-vector shape mismatch");
  std::vector<Polynomial<F>> out;
  for (size_t r = 0; r < a.rows; ++r) {
    auto acc = Polynomial<F>::zero(a.ring);
    for (size_t k = 0; k < a.cols; ++k) acc = acc + a.at(r, k) * v[k];
    out.push_back(std::move(acc));
  }
  return out;
}

namespace detail {

// Determinant of the submatrix on the given rows/columns, expanding along
// rows with memoization on the remaining column set.
template <class F>
Polynomial<F> det_submatrix(const PolyMatrix<F>& m,
                            const std::vector<size_t>& rows,
                            const std::vector<size_t>& cols,
                            std::map<uint64_t, Polynomial<F>>& memo) {
  uint64_t mask = 0;
  for (size_t c : cols) mask |= (uint64_t)1 << c;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  Polynomial<F> out = Polynomial<F>::zero(m.ring);
  if (cols.empty()) {
    out = Polynomial<F>::from_int(m.ring, 1);
  } else {
    size_t r = rows[rows.size() - cols.size()];  // expand along successive rows
    for (size_t j = 0; j < cols.size(); ++j) {
      const auto& e = m.at(r, cols[j]);
      if (e.is_zero()) continue;
      std::vector<size_t> rest;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != j) rest.push_back(cols[t]);
      auto sub = det_submatrix(m, rows, rest, memo);
      auto term = e * sub;
      out = (j % 2 == 0) ? out + term : out - term;
    }
  }
  memo.emplace(mask, out);
  return out;
}

}  // namespace detail

template <class F>
Polynomial<F> mat_det(const PolyMatrix<F>& m,
                      const std::vector<size_t>& rows,
                      const std::vector<size_t>& cols) {
  if (rows.size() != cols.size())
    throw Error(ErrKind::BadSize, "determinant of non-square selection");
  std::map<uint64_t, Polynomial<F>> memo;
  return detail::det_submatrix(m, rows, cols, memo);
}

template <class F>
Polynomial<F> mat_det(const PolyMatrix<F>& m) {
  if (m.rows != m.cols)
    throw Error(ErrKind::BadSize, "determinant of non-square matrix");
  std::vector<size_t> idx;
  for (size_t i = 0; i < m.rows; ++i) idx.push_back(i);
  return mat_det(m, idx, idx);
}

namespace detail {
inline void subsets_of(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> cur;
  // lexicographic k-subsets of {0..n-1}
  std::function<void(size_t)> rec = [&](size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}
}  // namespace detail

// All k-by-k minors, row sets and column sets in lexicographic order.
template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, size_t k) {
  std::vector<std::vector<size_t>> rsets, csets;
  detail::subsets_of(m.rows, k, rsets);
  detail::subsets_of(m.cols, k, csets);
  std::vector<Polynomial<F>> out;
  for (const auto& rs : rsets)
    for (const auto& cs : csets) out.push_back(mat_det(m, rs, cs));
  return out;
}

template <class F>
Ideal<F> minors_ideal(const PolyMatrix<F>& m, size_t k, GBOptions opts = {}) {
  return Ideal<F>(m.ring, minors(m, k), opts);
}

template <class F>
bool is_alternating(const PolyMatrix<F>& m) {
  if (m.rows != m.cols) return false;
  for (size_t r = 0; r < m.rows; ++r)
    for (size_t c = 0; c <= r; ++c)
      if (r == c ? !m.at(r, c).is_zero() : m.at(r, c) != -m.at(c, r))
        return false;
  return true;
}

namespace detail {
template <class F>
Polynomial<F> pfaffian_on(const PolyMatrix<F>& m, std::vector<size_t> idx) {
  if (idx.empty()) return Polynomial<F>::from_int(m.ring, 1);
  auto out = Polynomial<F>::zero(m.ring);
  size_t i0 = idx[0];
  for (size_t t = 1; t < idx.size(); ++t) {
    const auto& e = m.at(i0, idx[t]);
    if (e.is_zero()) continue;
    std::vector<size_t> rest;
    for (size_t s = 1; s < idx.size(); ++s)
      if (s != t) rest.push_back(idx[s]);
    auto term = e * pfaffian_on(m, rest);
    out = (t % 2 == 1) ? out + term : out - term;
  }
  return out;
}
}  // namespace detail

// Pfaffian of an alternating matrix; pf of [[0,1],[-1,0]] is +1.
template <class F>
Polynomial<F> pfaffian(const PolyMatrix<F>& m) {
  if (!is_alternating(m))
    throw Error(ErrKind::NotAlternating, "pfaffian of non-alternating matrix");
  if (m.rows % 2 != 0) return Polynomial<F>::zero(m.ring);
  std::vector<size_t> idx;
  for (size_t i = 0; i < m.rows; ++i) idx.push_back(i);
  return detail::pfaffian_on(m, idx);
}

// Pfaffians of the principal alternating submatrices obtained by deleting one
// row and the matching column (for odd-size alternating matrices).
template <class F>
std::vector<Polynomial<F>> principal_pfaffians(const PolyMatrix<F>& m) {
  if (!is_alternating(m))
    throw Error(ErrKind::NotAlternating, "pfaffian of non-alternating matrix");
  std::vector<Polynomial<F>> out;
  for (size_t drop = 0; drop < m.rows; ++drop) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < m.rows; ++i)
      if (i != drop) idx.push_back(i);
    out.push_back(detail::pfaffian_on(m, idx));
  }
  return out;
}

// Hessian with respect to the listed variables.
template <class F>
PolyMatrix<F> hessian(const Polynomial<F>& f, const std::vector<int>& vars) {
  if (f.ring()->field.spec().characteristic() == 2)
    throw Error(ErrKind::BadCharacteristic, "hessian in characteristic 2");
  PolyMatrix<F> m;
  m.ring = f.ring();
  m.rows = m.cols = vars.size();
  for (int r : vars) {
    auto dr = f.derivative(r);
    for (int c : vars) m.entries.push_back(dr.derivative(c));
  }
  return m;
}

template <class F>
PolyMatrix<F> jacobian_matrix(const std::vector<Polynomial<F>>& fs,
                              const std::vector<int>& vars) {
  if (fs.empty()) throw Error(ErrKind::BadSize, "jacobian of empty list");
  PolyMatrix<F> m;
  m.ring = fs[0].ring();
  m.rows = fs.size();
  m.cols = vars.size();
  for (const auto& f : fs) {
    check_same_ring(f.ring(), m.ring);
    for (int v : vars) m.entries.push_back(f.derivative(v));
  }
  return m;
}

// Koszul differential Lambda^k -> Lambda^{k-1} on f_0..f_{n-1}; bases are the
// k-subsets in lexicographic order.
template <class F>
PolyMatrix<F> koszul_matrix(const std::vector<Polynomial<F>>& fs, size_t k) {
  if (fs.empty() || k == 0 || k > fs.size())
    throw Error(ErrKind::BadSize, "koszul step out of range");
  const auto& ring = fs[0].ring();
  std::vector<std::vector<size_t>> source, target;
  detail::subsets_of(fs.size(), k, source);
  detail::subsets_of(fs.size(), k - 1, target);
  std::map<std::vector<size_t>, size_t> tindex;
  for (size_t i = 0; i < target.size(); ++i) tindex.emplace(target[i], i);
  PolyMatrix<F> m;
  m.ring = ring;
  m.rows = target.size();
  m.cols = source.size();
  m.entries.assign(m.rows * m.cols, Polynomial<F>::zero(ring));
  for (size_t c = 0; c < source.size(); ++c) {
    for (size_t t = 0; t < source[c].size(); ++t) {
      std::vector<size_t> rest;
      for (size_t s = 0; s < source[c].size(); ++s)
        if (s != t) rest.push_back(source[c][s]);
      auto val = fs[source[c][t]];
      m.at(tindex.at(rest), c) =
          t % 2 == 0 ? val : Polynomial<F>::zero(ring) - val;
    }
  }
  return m;
}

}  // namespace detvar
