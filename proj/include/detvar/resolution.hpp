// Free resolutions by iterated syzygy computation, graded twist tracking,
// unit cancellation (minimalization), Betti numbers both from minimal twists
// and from constant-strand ranks, and text rendering of Betti tables.
#pragma once

#include <iomanip>
#include <sstream>

#include "detvar/linalg.hpp"
#include "detvar/matrix.hpp"
#include "detvar/module_gb.hpp"

namespace detvar {

// maps[i] : F_{i+1} -> F_i for i = 0..len-1; twists[k] lists the multidegree
// of each basis element of F_k for k = 0..len.
template <class F>
struct FreeComplex {
  RingPtr<F> ring;
  std::vector<PolyMatrix<F>> maps;
  std::vector<std::vector<Multidegree>> twists;

  size_t length() const { return maps.size(); }
  size_t rank(size_t k) const { return twists[k].size(); }
};

// Composition of consecutive maps is zero everywhere.
template <class F>
bool complex_composes_to_zero(const FreeComplex<F>& c) {
  for (size_t i = 0; i + 1 < c.maps.size(); ++i) {
    auto prod = mat_mul(c.maps[i], c.maps[i + 1]);
    for (const auto& e : prod.entries)
      if (!e.is_zero()) return false;
  }
  return true;
}

namespace detail {

// Cancels one unit entry of maps[k] at (r, c), mirroring the basis change on
// maps[k-1]; returns false when maps[k] has no unit entry.  Only valid while
// maps[k] is the final map of the complex.
template <class F>
bool cancel_one_unit(FreeComplex<F>& cx, size_t k) {
  if (cx.maps.size() > k + 1)
    throw Error(ErrKind::BadSize, "unit cancellation only on the last map");
  auto& S = cx.maps[k];
  const F& fld = cx.ring->field;
  size_t r = 0, c = 0;
  bool found = false;
  for (size_t i = 0; i < S.rows && !found; ++i)
    for (size_t j = 0; j < S.cols && !found; ++j)
      if (!S.at(i, j).is_zero() && S.at(i, j).is_constant()) {
        r = i;
        c = j;
        found = true;
      }
  if (!found) return false;
  auto u = S.at(r, c).terms()[0].c;
  // clear row r using column c
  for (size_t j = 0; j < S.cols; ++j) {
    if (j == c || S.at(r, j).is_zero()) continue;
    auto factor = S.at(r, j).scaled(fld.inv(u));
    for (size_t i = 0; i < S.rows; ++i)
      S.at(i, j) = S.at(i, j) - factor * S.at(i, c);
  }
  // clear column c using row r, mirroring the basis change on maps[k-1]
  for (size_t i = 0; i < S.rows; ++i) {
    if (i == r || S.at(i, c).is_zero()) continue;
    auto factor = S.at(i, c).scaled(fld.inv(u));
    for (size_t j = 0; j < S.cols; ++j)
      S.at(i, j) = S.at(i, j) - factor * S.at(r, j);
    if (k > 0) {
      auto& M = cx.maps[k - 1];
      for (size_t t = 0; t < M.rows; ++t)
        M.at(t, r) = M.at(t, r) + factor * M.at(t, i);
    }
  }
  if (k > 0) {
    auto& M = cx.maps[k - 1];
    for (size_t t = 0; t < M.rows; ++t)
      if (!M.at(t, r).is_zero())
        throw Error(ErrKind::BadSize,
                    "cancellation invariant: surviving image column");
  }
  // drop row r / column c of S, column r of maps[k-1], twist bookkeeping
  auto drop_col = [](PolyMatrix<F>& m, size_t col) {
    PolyMatrix<F> out = m;
    out.cols = m.cols - 1;
    out.entries.clear();
    out.col_twists.clear();
    for (size_t i = 0; i < m.rows; ++i)
      for (size_t j = 0; j < m.cols; ++j)
        if (j != col) out.entries.push_back(m.at(i, j));
    for (size_t j = 0; j < m.cols; ++j)
      if (j != col && m.graded()) out.col_twists.push_back(m.col_twists[j]);
    m = std::move(out);
  };
  auto drop_row = [](PolyMatrix<F>& m, size_t row) {
    PolyMatrix<F> out = m;
    out.rows = m.rows - 1;
    out.entries.clear();
    out.row_twists.clear();
    for (size_t i = 0; i < m.rows; ++i)
      for (size_t j = 0; j < m.cols; ++j)
        if (i != row) out.entries.push_back(m.at(i, j));
    for (size_t i = 0; i < m.rows; ++i)
      if (i != row && m.graded()) out.row_twists.push_back(m.row_twists[i]);
    m = std::move(out);
  };
  drop_row(S, r);
  drop_col(S, c);
  if (k > 0) drop_col(cx.maps[k - 1], r);
  cx.twists[k].erase(cx.twists[k].begin() + (long)r);
  cx.twists[k + 1].erase(cx.twists[k + 1].begin() + (long)c);
  return true;
}

// Drops zero columns (generators equal to zero) of the last map.
template <class F>
void drop_zero_columns_of_last(FreeComplex<F>& cx) {
  if (cx.maps.empty()) return;
  auto& S = cx.maps.back();
  for (size_t j = S.cols; j-- > 0;) {
    bool zero = true;
    for (size_t i = 0; i < S.rows && zero; ++i)
      if (!S.at(i, j).is_zero()) zero = false;
    if (!zero) continue;
    PolyMatrix<F> out = S;
    out.cols = S.cols - 1;
    out.entries.clear();
    out.col_twists.clear();
    for (size_t r = 0; r < S.rows; ++r)
      for (size_t c = 0; c < S.cols; ++c)
        if (c != j) out.entries.push_back(S.at(r, c));
    for (size_t c = 0; c < S.cols; ++c)
      if (c != j && S.graded()) out.col_twists.push_back(S.col_twists[c]);
    S = std::move(out);
    cx.twists.back().erase(cx.twists.back().begin() + (long)j);
  }
}

}  // namespace detail

// Free resolution of coker(m0).  The input matrix must carry twists.  When
// minimalize is set, every computed syzygy matrix is reduced by unit
// cancellation before the next step, so the result is a minimal resolution.
template <class F>
FreeComplex<F> free_resolution(const PolyMatrix<F>& m0, GBOptions opts = {},
                               bool minimalize = true, size_t max_len = 0) {
  if (m0.row_twists.size() != m0.rows || m0.col_twists.size() != m0.cols)
    throw Error(ErrKind::BadSize, "resolution needs a graded input matrix");
  validate_graded(m0);
  if (max_len == 0) max_len = m0.ring->nvars() + 4;
  FreeComplex<F> cx;
  cx.ring = m0.ring;
  cx.twists.push_back(m0.row_twists);
  cx.twists.push_back(m0.col_twists);
  cx.maps.push_back(m0);
  if (minimalize)
    while (detail::cancel_one_unit(cx, 0)) {
    }
  while (true) {
    const auto& last = cx.maps.back();
    if (last.cols == 0) break;
    std::vector<VecOfPoly<F>> columns;
    for (size_t c = 0; c < last.cols; ++c) {
      VecOfPoly<F> col;
      for (size_t r = 0; r < last.rows; ++r) col.push_back(last.at(r, c));
      columns.push_back(std::move(col));
    }
    auto syz = syzygies(cx.ring, columns, opts);
    if (syz.empty()) break;
    PolyMatrix<F> S;
    S.ring = cx.ring;
    S.rows = last.cols;
    S.cols = syz.size();
    for (size_t r = 0; r < S.rows; ++r)
      for (size_t c = 0; c < S.cols; ++c) S.entries.push_back(syz[c][r]);
    derive_col_twists(S, last.col_twists);
    cx.maps.push_back(std::move(S));
    cx.twists.push_back(cx.maps.back().col_twists);
    if (minimalize) {
      size_t k = cx.maps.size() - 1;
      while (detail::cancel_one_unit(cx, k)) {
      }
      detail::drop_zero_columns_of_last(cx);
    }
    if (cx.maps.size() > max_len)
      throw Error(ErrKind::LengthExceeded,
                  "resolution exceeded " + std::to_string(max_len) + " steps");
  }
  while (!cx.maps.empty() && cx.maps.back().cols == 0) {
    cx.maps.pop_back();
    cx.twists.pop_back();
  }
  return cx;
}

// Resolution of R^1/I with F_0 = R.
template <class F>
FreeComplex<F> resolution_of_quotient(const Ideal<F>& I, GBOptions opts = {},
                                      bool minimalize = true,
                                      size_t max_len = 0) {
  PolyMatrix<F> m0;
  m0.ring = I.ring();
  m0.rows = 1;
  m0.cols = I.gens().size();
  m0.entries = I.gens();
  derive_col_twists(m0, {Multidegree(I.ring()->grading_rank, 0)});
  return free_resolution(m0, opts, minimalize, max_len);
}

// ---------------------------------------------------------------------------
// Betti tables, indexed by (homological degree i, coarse internal degree j).

struct BettiTable {
  std::map<std::pair<long long, long long>, long long> beta;  // (i, j) -> count

  long long at(long long i, long long j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
  }
  bool operator==(const BettiTable& o) const { return beta == o.beta; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

  std::vector<long long> totals() const {
    std::vector<long long> out;
    for (const auto& [ij, c] : beta) {
      if ((size_t)ij.first >= out.size()) out.resize(ij.first + 1, 0);
      out[ij.first] += c;
    }
    return out;
  }

  // Laid out like the customary computer-algebra display: columns are
  // homological degrees, the row labelled d holds the counts with j - i = d,
  // dots mark zero entries, and the row range is contiguous.
  std::string render() const {
    if (beta.empty()) return "empty betti table\n";
    long long imax = 0, dmin = 0, dmax = 0;
    bool first = true;
    for (const auto& [ij, c] : beta) {
      (void)c;
      imax = std::max(imax, ij.first);
      long long d = ij.second - ij.first;
      if (first) {
        dmin = dmax = d;
        first = false;
      } else {
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
      }
    }
    auto tot = totals();
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> cells;
    {
      std::vector<std::string> head;
      for (long long i = 0; i <= imax; ++i) head.push_back(std::to_string(i));
      labels.push_back("");
      cells.push_back(head);
    }
    {
      std::vector<std::string> row;
      for (long long i = 0; i <= imax; ++i)
        row.push_back(std::to_string((size_t)i < tot.size() ? tot[i] : 0));
      labels.push_back("total:");
      cells.push_back(row);
    }
    for (long long d = dmin; d <= dmax; ++d) {
      std::vector<std::string> row;
      for (long long i = 0; i <= imax; ++i) {
        long long v = at(i, i + d);
        row.push_back(v ? std::to_string(v) : ".");
      }
      labels.push_back(std::to_string(d) + ":");
      cells.push_back(row);
    }
    size_t lab_w = 0;
    for (const auto& l : labels) lab_w = std::max(lab_w, l.size());
    std::vector<size_t> col_w((size_t)imax + 1, 1);
    for (const auto& row : cells)
      for (size_t i = 0; i < row.size(); ++i)
        col_w[i] = std::max(col_w[i], row[i].size());
    std::ostringstream os;
    for (size_t r = 0; r < cells.size(); ++r) {
      os << std::setw((int)lab_w) << labels[r];
      for (size_t i = 0; i < cells[r].size(); ++i)
        os << ' ' << std::setw((int)col_w[i]) << cells[r][i];
      os << '\n';
    }
    return os.str();
  }
};

// Restriction of a Betti table to homological degrees <= imax (the display a
// generator-level inspection prints before resolving further).
inline BettiTable betti_truncate(const BettiTable& t, long long imax) {
  BettiTable out;
  for (const auto& [ij, c] : t.beta)
    if (ij.first <= imax) out.beta[ij] = c;
  return out;
}

// Betti table assembled from explicit (i, j, count) triples; test literals.
inline BettiTable betti_of(
    std::vector<std::tuple<long long, long long, long long>> triples) {
  BettiTable out;
  for (const auto& [i, j, c] : triples) out.beta[{i, j}] += c;
  return out;
}

// Betti table read off the twists of a minimal resolution (no unit entries).
template <class F>
BettiTable betti_from_twists(const FreeComplex<F>& cx) {
  for (const auto& m : cx.maps)
    for (const auto& e : m.entries)
      if (!e.is_zero() && e.is_constant())
        throw Error(ErrKind::BadSize,
                    "betti_from_twists requires a minimal complex");
  BettiTable t;
  for (size_t k = 0; k < cx.twists.size(); ++k)
    for (const auto& d : cx.twists[k]) t.beta[{(long long)k, deg_total(d)}]++;
  return t;
}

// Betti table of the minimal resolution computed from any free resolution by
// the constant-strand rank formula: for each multidegree J,
//   beta_{i,J} = #gens_J(F_i) - rank(strand d_i)_J - rank(strand d_{i+1})_J,
// where the strand of a map at J is its constant block between generators of
// twist exactly J.
template <class F>
BettiTable betti_via_strands(const FreeComplex<F>& cx) {
  const F& fld = cx.ring->field;
  auto strand_rank = [&](size_t map_idx, const Multidegree& J) -> long long {
    const auto& m = cx.maps[map_idx];
    std::vector<size_t> rs, cs;
    for (size_t r = 0; r < m.rows; ++r)
      if (m.row_twists[r] == J) rs.push_back(r);
    for (size_t c = 0; c < m.cols; ++c)
      if (m.col_twists[c] == J) cs.push_back(c);
    if (rs.empty() || cs.empty()) return 0;
    DenseMatrix<F> d(fld, rs.size(), cs.size());
    for (size_t a = 0; a < rs.size(); ++a)
      for (size_t b = 0; b < cs.size(); ++b) {
        const auto& e = m.at(rs[a], cs[b]);
        d.at(a, b) = e.is_zero() ? fld.zero() : e.terms()[0].c;
      }
    return (long long)matrix_rank(fld, d);
  };
  BettiTable t;
  for (size_t k = 0; k < cx.twists.size(); ++k) {
    std::map<Multidegree, long long> counts;
    for (const auto& d : cx.twists[k]) counts[d]++;
    for (const auto& [J, n] : counts) {
      long long v = n;
      if (k < cx.maps.size()) v -= strand_rank(k, J);
      if (k > 0) v -= strand_rank(k - 1, J);
      if (v < 0)
        throw Error(ErrKind::BadSize, "negative strand-corrected betti count");
      if (v > 0) t.beta[{(long long)k, deg_total(J)}] += v;
    }
  }
  return t;
}

}  // namespace detvar
