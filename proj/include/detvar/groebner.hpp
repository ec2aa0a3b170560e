// Buchberger's algorithm with the Gebauer-Moeller pair criteria and normal
// selection strategy, multivariate division (full normal forms), and reduced
// Groebner bases.  Deterministic: no hashing, no threads, stable tie-breaks.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "detvar/polynomial.hpp"

namespace detvar {

struct GBOptions {
  // Aborts when an S-pair lcm exceeds this total degree; runaway guard.
  long long degree_cap = 40;
  // Disables the pair-pruning criteria (used by tests to cross-check that
  // pruned and unpruned runs agree).
  bool use_criteria = true;
};

template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;
  OrderSpec order;
  std::vector<Polynomial<F>> gens;  // reduced basis, ascending leading terms

  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool is_zero() const { return gens.empty(); }
  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) s += ", ";
      s += gens[i].str();
    }
    return s + "}";
  }
};

namespace detail {

// Scale to canonical form for use during the computation: monic over F_p;
// content-stripped primitive integer coefficients with positive leading
// coefficient over Q (controls coefficient growth).
template <class F>
void normalize_inplace(const RingPtr<F>& ring, std::vector<Term<F>>& t);

inline void normalize_terms(const RingPtr<FpField>& ring,
                            std::vector<Term<FpField>>& t) {
  if (t.empty()) return;
  auto inv = ring->field.inv(t.front().c);
  for (auto& x : t) x.c = ring->field.mul(x.c, inv);
}

inline void normalize_terms(const RingPtr<QField>& ring,
                            std::vector<Term<QField>>& t) {
  (void)ring;
  if (t.empty()) return;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (auto& x : t) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.c.get_den().get_mpz_t());
  for (auto& x : t) {
    mpz_class n = x.c.get_num() * (den_lcm / x.c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return;
  mpq_class scale(den_lcm, num_gcd);
  if (t.front().c < 0) scale = -scale;
  scale.canonicalize();
  for (auto& x : t) x.c *= scale;
}

// Working accumulator for division: ordered map keyed by monomial, largest
// first under the active order.
template <class F>
using WorkMap = std::map<Monomial, typename F::Elem, MonoGreater>;

}  // namespace detail

// Full division engine for a fixed (ring, order, divisor list).
template <class F>
class Divider {
 public:
  using Elem = typename F::Elem;
  using Terms = std::vector<Term<F>>;

  Divider(RingPtr<F> ring, OrderSpec order)
      : ring_(std::move(ring)), ord_(std::move(order)) {}

  const OrderSpec& order() const { return ord_; }
  const std::vector<Terms>& divisors() const { return divisors_; }

  // Divisor polynomials must be nonzero; stored re-sorted under the order.
  void add_divisor(const Polynomial<F>& p) { add_divisor_terms(sorted(p)); }
  void add_divisor_terms(Terms t) {
    detail::normalize_terms(ring_, t);
    divisors_.push_back(std::move(t));
  }

  Terms sorted(const Polynomial<F>& p) const {
    Terms t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term<F>& a, const Term<F>& b) {
      return mono_cmp(a.m, b.m, ord_) > 0;
    });
    return t;
  }
  Polynomial<F> to_poly(const Terms& t) const {
    return Polynomial<F>::make(ring_, t);
  }

  // Full normal form: every term of the result is irreducible.
  Terms reduce(const Terms& input) const {
    const F& k = ring_->field;
    detail::WorkMap<F> work{MonoGreater{&ord_}};
    for (const auto& t : input) work.emplace(t.m, t.c);
    Terms out;
    while (!work.empty()) {
      auto it = work.begin();  // largest monomial
      Monomial m = it->first;
      Elem c = it->second;
      const Terms* g = find_reducer(m);
      if (!g) {
        out.push_back({c, m});
        work.erase(it);
        continue;
      }
      work.erase(it);
      Monomial q = mono_div(m, (*g)[0].m);
      Elem s = k.div(c, (*g)[0].c);
      for (size_t j = 1; j < g->size(); ++j) {
        Monomial mj = mono_mul((*g)[j].m, q);
        Elem cj = k.mul(s, (*g)[j].c);
        auto [jt, fresh] = work.emplace(mj, k.neg(cj));
        if (!fresh) {
          jt->second = k.sub(jt->second, cj);
          if (k.is_zero(jt->second)) work.erase(jt);
        }
      }
    }
    return out;
  }

 private:
  const Terms* find_reducer(const Monomial& m) const {
    for (const auto& g : divisors_)
      if (mono_divides(g[0].m, m)) return &g;
    return nullptr;
  }

  RingPtr<F> ring_;
  OrderSpec ord_;
  std::vector<Terms> divisors_;
};

namespace detail {

template <class F>
class Buchberger {
 public:
  using Elem = typename F::Elem;
  using Terms = std::vector<Term<F>>;

  Buchberger(RingPtr<F> ring, OrderSpec order, GBOptions opts)
      : ring_(std::move(ring)),
        ord_(std::move(order)),
        opts_(opts),
        div_(ring_, ord_) {}

  GroebnerBasis<F> run(const std::vector<Polynomial<F>>& gens) {
    for (const auto& g : gens) {
      check_same_ring(g.ring(), ring_);
      if (g.is_zero()) continue;
      add_element(div_.reduce(div_.sorted(g)));
    }
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if ((long long)pr.lcm.deg > opts_.degree_cap)
        throw Error(ErrKind::DegreeBoundExceeded,
                    "S-pair degree " + std::to_string(pr.lcm.deg) +
                        " exceeds cap " + std::to_string(opts_.degree_cap));
      Terms s = spoly(pr.i, pr.j, pr.lcm);
      add_element(div_.reduce(s));
    }
    return finish();
  }

 private:
  struct Pair {
    Monomial lcm;
    size_t i, j;
    const OrderSpec* ord;
    bool operator<(const Pair& o) const {
      if (lcm.deg != o.lcm.deg) return lcm.deg < o.lcm.deg;
      int c = mono_cmp(lcm, o.lcm, *ord);
      if (c) return c < 0;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  const Terms& basis(size_t i) const { return div_.divisors()[i]; }
  const Monomial& lt(size_t i) const { return basis(i)[0].m; }

  Terms spoly(size_t i, size_t j, const Monomial& lcm) {
    const F& k = ring_->field;
    Monomial qi = mono_div(lcm, lt(i)), qj = mono_div(lcm, lt(j));
    Elem ci = k.inv(basis(i)[0].c), cj = k.inv(basis(j)[0].c);
    // qi*f_i/lc_i - qj*f_j/lc_j, merged under the active order
    WorkMap<F> work{MonoGreater{&ord_}};
    for (const auto& t : basis(i)) {
      auto [it, fresh] = work.emplace(mono_mul(t.m, qi), k.mul(t.c, ci));
      if (!fresh) it->second = k.add(it->second, k.mul(t.c, ci));
    }
    for (const auto& t : basis(j)) {
      Elem c = k.mul(t.c, cj);
      auto [it, fresh] = work.emplace(mono_mul(t.m, qj), k.neg(c));
      if (!fresh) {
        it->second = k.sub(it->second, c);
        if (k.is_zero(it->second)) work.erase(it);
      }
    }
    Terms out;
    out.reserve(work.size());
    for (auto& [m, c] : work)
      if (!k.is_zero(c)) out.push_back({c, m});
    return out;
  }

  void add_element(Terms nf) {
    if (nf.empty()) return;
    size_t t = div_.divisors().size();
    Monomial L = nf[0].m;
    div_.add_divisor_terms(std::move(nf));

    if (!opts_.use_criteria) {
      for (size_t i = 0; i < t; ++i)
        pairs_.insert(Pair{mono_lcm(lt(i), L), i, t, &ord_});
      return;
    }
    // Gebauer-Moeller update.
    struct Cand {
      Monomial lcm;
      size_t i;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < t; ++i)
      cands.push_back({mono_lcm(lt(i), L), i, mono_coprime(lt(i), L)});
    // F criterion: group by equal lcm; a class containing a coprime pair is
    // dropped entirely, otherwise one representative (smallest i) survives.
    std::vector<Cand> reps;
    std::vector<bool> grouped(cands.size(), false);
    for (size_t a = 0; a < cands.size(); ++a) {
      if (grouped[a]) continue;
      bool coprime = cands[a].coprime;
      size_t rep = a;
      for (size_t b = a + 1; b < cands.size(); ++b) {
        if (grouped[b] || cands[b].lcm != cands[a].lcm) continue;
        grouped[b] = true;
        coprime = coprime || cands[b].coprime;
      }
      if (!coprime) reps.push_back(cands[rep]);
    }
    // M criterion: drop a candidate whose lcm is properly divisible by the
    // lcm of another surviving candidate.
    std::vector<Cand> kept;
    for (size_t a = 0; a < reps.size(); ++a) {
      bool drop = false;
      for (size_t b = 0; b < reps.size() && !drop; ++b)
        if (b != a && reps[b].lcm != reps[a].lcm &&
            mono_divides(reps[b].lcm, reps[a].lcm))
          drop = true;
      if (!drop) kept.push_back(reps[a]);
    }
    // B (chain) criterion on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (mono_divides(L, p.lcm) && mono_lcm(lt(p.i), L) != p.lcm &&
          mono_lcm(lt(p.j), L) != p.lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (const auto& c : kept) pairs_.insert(Pair{c.lcm, c.i, t, &ord_});
  }

  GroebnerBasis<F> finish() {
    const auto& all = div_.divisors();
    // minimal basis: leading terms pairwise non-dividing
    std::vector<size_t> keep;
    for (size_t i = 0; i < all.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < all.size() && !redundant; ++j) {
        if (i == j) continue;
        if (mono_divides(all[j][0].m, all[i][0].m)) {
          // on ties (equal lt), keep the earlier element
          if (all[j][0].m != all[i][0].m || j < i) redundant = true;
        }
      }
      if (!redundant) keep.push_back(i);
    }
    // inter-reduce tails
    GroebnerBasis<F> gb;
    gb.ring = ring_;
    gb.order = ord_;
    std::vector<Terms> minimal;
    for (size_t i : keep) minimal.push_back(all[i]);
    for (size_t a = 0; a < minimal.size(); ++a) {
      Divider<F> d(ring_, ord_);
      for (size_t b = 0; b < minimal.size(); ++b)
        if (b != a) d.add_divisor_terms(minimal[b]);
      Terms red = d.reduce(minimal[a]);
      // make monic (canonical reduced GB over both fields)
      const F& k = ring_->field;
      Elem inv = k.inv(red[0].c);
      for (auto& t : red) t.c = k.mul(t.c, inv);
      minimal[a] = std::move(red);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Terms& x, const Terms& y) {
                return mono_cmp(x[0].m, y[0].m, ord_) < 0;
              });
    for (auto& t : minimal) gb.gens.push_back(Polynomial<F>::make(ring_, t));
    return gb;
  }

  RingPtr<F> ring_;
  OrderSpec ord_;
  GBOptions opts_;
  Divider<F> div_;
  std::set<Pair> pairs_;
};

}  // namespace detail

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring,
                            const std::vector<Polynomial<F>>& gens,
                            const OrderSpec& order, GBOptions opts = {}) {
  detail::Buchberger<F> engine(ring, order, opts);
  return engine.run(gens);
}

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring,
                            const std::vector<Polynomial<F>>& gens,
                            GBOptions opts = {}) {
  return buchberger(ring, gens, ring->default_order, opts);
}

// Normal form of f modulo a reduced basis; idempotent.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  check_same_ring(f.ring(), gb.ring);
  Divider<F> d(gb.ring, gb.order);
  for (const auto& g : gb.gens) d.add_divisor(g);
  return d.to_poly(d.reduce(d.sorted(f)));
}

// Exact single-divisor division; nullopt when f is not divisible by g.
template <class F>
std::optional<Polynomial<F>> exact_divide(const Polynomial<F>& f,
                                          const Polynomial<F>& g) {
  check_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw Error(ErrKind::ZeroIdealDivisor, "division by zero");
  const F& k = f.ring()->field;
  Polynomial<F> rem = f, quot = Polynomial<F>::zero(f.ring());
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    const auto& lg = g.leading_term();
    if (!mono_divides(lg.m, lt.m)) return std::nullopt;
    auto c = k.div(lt.c, lg.c);
    auto m = mono_div(lt.m, lg.m);
    quot = quot + Polynomial<F>::make(f.ring(), {{c, m}});
    rem = rem - g.times_term(c, m);
  }
  return quot;
}

}  // namespace detvar
