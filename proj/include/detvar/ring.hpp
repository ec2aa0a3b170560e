// Multigraded polynomial rings over a coefficient field: variable names,
// Z^k-degrees per variable, and a default term order.  Ring values are
// immutable and shared by pointer; structural equality (not pointer identity)
// decides compatibility of operands.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "detvar/field.hpp"
#include "detvar/order.hpp"

namespace detvar {

using Multidegree = std::vector<long long>;

inline std::string deg_str(const Multidegree& d) {
  if (d.size() == 1) return std::to_string(d[0]);
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

inline Multidegree deg_add(const Multidegree& a, const Multidegree& b) {
  Multidegree r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline Multidegree deg_sub(const Multidegree& a, const Multidegree& b) {
  Multidegree r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline Multidegree deg_neg(const Multidegree& a) {
  Multidegree r(a);
  for (auto& x : r) x = -x;
  return r;
}
inline long long deg_total(const Multidegree& a) {
  long long t = 0;
  for (auto x : a) t += x;
  return t;
}

namespace detail {
// Checks that some rational linear functional is strictly positive on every
// degree vector (equivalently, 0 is not in their convex hull).  Grading rank
// is at most 3 here, so exact Fourier-Motzkin elimination on the functional's
// coordinates is cheap.
inline bool has_positive_functional(const std::vector<Multidegree>& degs) {
  if (degs.empty()) return true;
  size_t k = degs[0].size();
  // Feasibility of { c : c . d >= 1 for all d }.  Rows store (coeffs, rhs)
  // with the convention sum(coeffs[i] * c_i) >= rhs.
  std::vector<std::pair<std::vector<mpq_class>, mpq_class>> rows;
  for (const auto& d : degs) {
    std::vector<mpq_class> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = (long)d[i];
    rows.push_back({c, mpq_class(1)});
  }
  for (size_t v = 0; v < k; ++v) {
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> pos, neg, zero;
    for (auto& r : rows) {
      if (r.first[v] > 0)
        pos.push_back(r);
      else if (r.first[v] < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> next = zero;
    for (auto& p : pos)
      for (auto& n : neg) {
        // eliminate c_v between p (c_v >= ...) and n (c_v <= ...)
        std::vector<mpq_class> c(k);
        for (size_t i = 0; i < k; ++i)
          c[i] = p.first[i] / p.first[v] - n.first[i] / n.first[v];
        mpq_class rhs = p.second / p.first[v] - n.second / n.first[v];
        c[v] = 0;
        next.push_back({c, rhs});
      }
    rows = std::move(next);
  }
  // All variables eliminated: rows are "0 >= rhs" constraints.
  for (auto& r : rows)
    if (r.second > 0) return false;
  return true;
}
}  // namespace detail

template <class F>
struct Ring {
  explicit Ring(F f) : field(std::move(f)) {}

  F field;
  std::vector<std::string> vars;
  std::vector<Multidegree> degs;  // one Z^k vector per variable
  size_t grading_rank = 1;
  OrderSpec default_order;
  std::map<std::string, int> var_index;

  int nvars() const { return (int)vars.size(); }
  int index_of(const std::string& name) const {
    auto it = var_index.find(name);
    if (it == var_index.end())
      throw Error(ErrKind::UnknownVariable, "no variable '" + name + "'");
    return it->second;
  }
  bool has_var(const std::string& name) const {
    return var_index.count(name) > 0;
  }
  Multidegree mono_degree(const Monomial& m) const {
    Multidegree d(grading_rank, 0);
    for (int i = 0; i < nvars(); ++i)
      if (m.e[i])
        for (size_t j = 0; j < grading_rank; ++j) d[j] += (long long)m.e[i] * degs[i][j];
    return d;
  }
  // Coarse Z-grading: total of the multidegree components.
  long long coarse_weight(int var) const { return deg_total(degs[var]); }
  bool standard_coarse_grading() const {
    for (int i = 0; i < nvars(); ++i)
      if (coarse_weight(i) != 1) return false;
    return true;
  }
  std::string describe() const {
    std::string s = "vars=";
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) s += ",";
      s += vars[i];
    }
    s += "; degrees=";
    for (size_t i = 0; i < degs.size(); ++i) {
      if (i) s += ",";
      s += deg_str(degs[i]);
    }
    s += "; field=" + field.spec().str();
    return s;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
bool ring_equal(const Ring<F>& a, const Ring<F>& b) {
  return a.field.spec() == b.field.spec() && a.vars == b.vars && a.degs == b.degs;
}

template <class F>
void check_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !ring_equal(*a, *b))
    throw Error(ErrKind::RingMismatch, "operands live in different rings");
}

template <class F>
RingPtr<F> ring_create(F field, std::vector<std::string> vars,
                       std::vector<Multidegree> degs) {
  if (vars.empty()) throw Error(ErrKind::BadSize, "ring needs variables");
  if ((int)vars.size() > kMaxVars)
    throw Error(ErrKind::BadSize, "too many variables (max " +
                                      std::to_string(kMaxVars) + ")");
  if (degs.size() != vars.size())
    throw Error(ErrKind::BadSize, "one degree vector per variable required");
  size_t k = degs[0].size();
  if (k == 0) throw Error(ErrKind::BadSize, "grading rank must be positive");
  for (const auto& d : degs)
    if (d.size() != k)
      throw Error(ErrKind::BadSize, "inconsistent grading rank");
  auto r = std::make_shared<Ring<F>>(std::move(field));
  r->vars = std::move(vars);
  r->degs = std::move(degs);
  r->grading_rank = k;
  for (int i = 0; i < r->nvars(); ++i) {
    if (r->vars[i].empty() ||
        !(isalpha((unsigned char)r->vars[i][0])))
      throw Error(ErrKind::BadSize, "bad variable name '" + r->vars[i] + "'");
    if (!r->var_index.emplace(r->vars[i], i).second)
      throw Error(ErrKind::BadSize, "duplicate variable '" + r->vars[i] + "'");
  }
  if (!detail::has_positive_functional(r->degs))
    throw Error(ErrKind::NonPositiveGrading,
                "no linear functional is positive on all variable degrees");
  r->default_order = OrderSpec::grevlex(r->nvars());
  return r;
}

// Convenience: standard-graded ring (all variables of degree 1).
template <class F>
RingPtr<F> ring_standard(F field, std::vector<std::string> vars) {
  std::vector<Multidegree> degs(vars.size(), Multidegree{1});
  return ring_create(std::move(field), std::move(vars), std::move(degs));
}

}  // namespace detvar
