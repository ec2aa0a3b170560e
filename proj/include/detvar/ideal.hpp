// Ideals with cached Groebner bases and the standard toolbox: sums, products,
// intersections (auxiliary-variable elimination), colon ideals, iterated
// saturation, variable elimination, and radical membership.
#pragma once

#include <map>
#include <memory>

#include "detvar/groebner.hpp"

namespace detvar {

template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens, GBOptions opts = {})
      : ring_(std::move(ring)), opts_(opts) {
    for (auto& g : gens) {
      check_same_ring(g.ring(), ring_);
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    cache_ = std::make_shared<Cache>();
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& gens() const { return gens_; }
  const GBOptions& options() const { return opts_; }

  Ideal with_cap(long long cap) const {
    GBOptions o = opts_;
    o.degree_cap = cap;
    return Ideal(ring_, gens_, o);
  }

  const GroebnerBasis<F>& groebner(const OrderSpec& ord) const {
    auto key = ord.key();
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return it->second;
    auto gb = buchberger(ring_, gens_, ord, opts_);
    return cache_->by_order.emplace(key, std::move(gb)).first->second;
  }
  const GroebnerBasis<F>& groebner() const {
    return groebner(ring_->default_order);
  }

  bool contains(const Polynomial<F>& f) const {
    return normal_form(f, groebner()).is_zero();
  }
  bool is_zero_ideal() const { return groebner().is_zero(); }
  bool is_unit_ideal() const { return groebner().is_unit(); }
  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  std::string str() const {
    std::string s = "ideal(";
    for (size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].str();
    }
    return s + ")";
  }

 private:
  struct Cache {
    std::map<std::string, GroebnerBasis<F>> by_order;
  };
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  GBOptions opts_;
  std::shared_ptr<Cache> cache_;  // shared across copies
};

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  auto gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return Ideal<F>(a.ring(), std::move(gens), a.options());
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal<F>(a.ring(), std::move(gens), a.options());
}

// a subset of b
template <class F>
bool ideal_subset(const Ideal<F>& a, const Ideal<F>& b) {
  for (const auto& g : a.gens())
    if (!b.contains(g)) return false;
  return true;
}

// Reduced Groebner bases are canonical, so equality is a list comparison.
template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  return a.groebner().gens == b.groebner().gens;
}

// Splits every generator into its homogeneous components.  Only valid when
// the ideal is homogeneous (each component then still lies in the ideal).
template <class F>
Ideal<F> split_graded_components(const Ideal<F>& a) {
  std::vector<Polynomial<F>> out;
  for (const auto& g : a.gens()) {
    std::map<Multidegree, std::vector<Term<F>>> comp;
    for (const auto& t : g.terms())
      comp[a.ring()->mono_degree(t.m)].push_back(t);
    for (auto& [d, terms] : comp)
      out.push_back(Polynomial<F>::make(a.ring(), terms));
  }
  return Ideal<F>(a.ring(), std::move(out), a.options());
}

template <class F>
Ideal<F> ideal_map_by_name(const Ideal<F>& a, const RingPtr<F>& target,
                           GBOptions opts = {}) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.gens()) gens.push_back(g.map_by_name(target));
  return Ideal<F>(target, std::move(gens), opts);
}

namespace detail {

// Ungraded companion ring with one fresh variable in front, used for the
// intersection trick and radical membership.
template <class F>
RingPtr<F> aux_ring(const RingPtr<F>& base) {
  std::string aux = "t";
  while (base->has_var(aux)) aux += "t";
  std::vector<std::string> vars{aux};
  for (const auto& v : base->vars) vars.push_back(v);
  return ring_standard(base->field, vars);
}

}  // namespace detail

// a .. b via the single-variable trick: eliminate t from t*a + (1-t)*b.
template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (a.is_zero_ideal() || b.is_zero_ideal())
    return Ideal<F>(a.ring(), {}, a.options());
  auto ext = detail::aux_ring(a.ring());
  auto t = Polynomial<F>::variable(ext, 0, 1);
  auto one = Polynomial<F>::from_int(ext, 1);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.gens()) gens.push_back(t * g.map_by_name(ext));
  for (const auto& g : b.gens()) gens.push_back((one - t) * g.map_by_name(ext));
  auto ord = OrderSpec::elimination({0}, (int)ext->nvars());
  auto gb = buchberger(ext, gens, ord, a.options());
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.gens) {
    bool free = true;
    for (const auto& tm : g.terms())
      if (tm.m.e[0] != 0) {
        free = false;
        break;
      }
    if (free) kept.push_back(g.map_by_name(a.ring()));
  }
  Ideal<F> result(a.ring(), std::move(kept), a.options());
  if (a.is_homogeneous() && b.is_homogeneous())
    return split_graded_components(result);
  return result;
}

// a : (f) = (a .. (f)) / f, computed by exact division of each generator.
template <class F>
Ideal<F> ideal_colon(const Ideal<F>& a, const Polynomial<F>& f) {
  check_same_ring(a.ring(), f.ring());
  if (f.is_zero())
    throw Error(ErrKind::ZeroIdealDivisor, "colon by the zero polynomial");
  Ideal<F> principal(a.ring(), {f}, a.options());
  auto inter = ideal_intersect(a, principal);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : inter.gens()) {
    auto q = exact_divide(g, f);
    if (!q)
      throw Error(ErrKind::ZeroIdealDivisor,
                  "intersection element not divisible by colon divisor");
    gens.push_back(std::move(*q));
  }
  return Ideal<F>(a.ring(), std::move(gens), a.options());
}

// a : b = intersection of a : (f) over generators f of b.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (b.is_zero_ideal())
    return Ideal<F>(a.ring(), {Polynomial<F>::from_int(a.ring(), 1)},
                    a.options());
  bool first = true;
  Ideal<F> acc(a.ring(), {}, a.options());
  for (const auto& f : b.gens()) {
    if (f.is_zero()) continue;
    auto c = ideal_colon(a, f);
    acc = first ? c : ideal_intersect(acc, c);
    first = false;
  }
  return acc;
}

// a : b^infinity by iterating the quotient until it stabilizes.
template <class F>
Ideal<F> ideal_saturate(const Ideal<F>& a, const Ideal<F>& b,
                        int max_rounds = 50) {
  Ideal<F> cur = a;
  for (int round = 0; round < max_rounds; ++round) {
    auto next = ideal_quotient(cur, b);
    if (ideal_equal(next, cur)) return cur;
    cur = std::move(next);
  }
  throw Error(ErrKind::SaturationDiverged,
              "saturation did not stabilize within " +
                  std::to_string(max_rounds) + " rounds");
}

// Generators of the subideal of elements not involving the given variables,
// via a block order.  The result lives in the same ring.
template <class F>
Ideal<F> ideal_eliminate(const Ideal<F>& a, const std::vector<int>& vars) {
  auto ord = OrderSpec::elimination(vars, (int)a.ring()->nvars());
  const auto& gb = a.groebner(ord);
  std::vector<bool> drop(a.ring()->nvars(), false);
  for (int v : vars) drop[(size_t)v] = true;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.gens) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (size_t i = 0; i < (size_t)a.ring()->nvars() && free; ++i)
        if (drop[i] && t.m.e[i] != 0) free = false;
      if (!free) break;
    }
    if (free) kept.push_back(g);
  }
  return Ideal<F>(a.ring(), std::move(kept), a.options());
}

template <class F>
Ideal<F> ideal_eliminate(const Ideal<F>& a,
                         const std::vector<std::string>& names) {
  std::vector<int> vars;
  for (const auto& n : names) vars.push_back((int)a.ring()->index_of(n));
  return ideal_eliminate(a, vars);
}

// f in rad(a), by the trick of adjoining 1 - t*f and testing for the unit
// ideal.
template <class F>
bool radical_membership(const Ideal<F>& a, const Polynomial<F>& f) {
  check_same_ring(a.ring(), f.ring());
  if (f.is_zero()) return true;
  auto ext = detail::aux_ring(a.ring());
  auto t = Polynomial<F>::variable(ext, 0, 1);
  auto one = Polynomial<F>::from_int(ext, 1);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.gens()) gens.push_back(g.map_by_name(ext));
  gens.push_back(one - t * f.map_by_name(ext));
  auto gb = buchberger(ext, gens, ext->default_order, a.options());
  return gb.is_unit();
}

}  // namespace detvar
