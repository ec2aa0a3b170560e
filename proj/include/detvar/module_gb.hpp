// Groebner bases for submodules of free modules R^t under the
// position-over-term order (lower component dominates), and syzygy modules of
// finite generating sets, computed by tagging generators with unit vectors in
// an extended free module.
#pragma once

#include <algorithm>
#include <map>
#include <set>

#include "detvar/groebner.hpp"

namespace detvar {

// One column vector of polynomials; entry i is the coefficient of e_i.
template <class F>
using VecOfPoly = std::vector<Polynomial<F>>;

namespace detail {

struct VKey {
  int comp;
  Monomial m;
  bool operator==(const VKey& o) const { return comp == o.comp && m == o.m; }
  bool operator!=(const VKey& o) const { return !(*this == o); }
};

// Position-over-term: smaller component wins, ties broken by the ring order.
inline int vkey_cmp(const VKey& a, const VKey& b, const OrderSpec& ord) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return mono_cmp(a.m, b.m, ord);
}

struct VKeyGreater {
  const OrderSpec* ord;
  bool operator()(const VKey& a, const VKey& b) const {
    return vkey_cmp(a, b, *ord) > 0;
  }
};

template <class F>
struct VTerm {
  typename F::Elem c;
  VKey k;
};

template <class F>
class ModuleEngine {
 public:
  using Elem = typename F::Elem;
  using VTerms = std::vector<VTerm<F>>;

  ModuleEngine(RingPtr<F> ring, OrderSpec ord, GBOptions opts)
      : ring_(std::move(ring)), ord_(std::move(ord)), opts_(opts) {}

  // vec[i] = coefficient of e_i
  VTerms flatten(const VecOfPoly<F>& vec) const {
    VTerms out;
    for (int i = 0; i < (int)vec.size(); ++i) {
      if (vec[i].is_zero()) continue;
      check_same_ring(vec[i].ring(), ring_);
      for (const auto& t : vec[i].terms()) out.push_back({t.c, {i, t.m}});
    }
    std::sort(out.begin(), out.end(), [&](const VTerm<F>& a, const VTerm<F>& b) {
      return vkey_cmp(a.k, b.k, ord_) > 0;
    });
    return out;
  }

  VecOfPoly<F> unflatten(const VTerms& v, int ncomp) const {
    std::vector<std::vector<Term<F>>> per((size_t)ncomp);
    for (const auto& t : v) per[(size_t)t.k.comp].push_back({t.c, t.k.m});
    VecOfPoly<F> out;
    for (auto& terms : per) out.push_back(Polynomial<F>::make(ring_, terms));
    return out;
  }

  std::vector<VTerms> run(const std::vector<VecOfPoly<F>>& gens) {
    for (const auto& g : gens) {
      VTerms v = reduce(flatten(g));
      add_element(std::move(v));
    }
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if ((long long)pr.lcm.deg > opts_.degree_cap)
        throw Error(ErrKind::DegreeBoundExceeded,
                    "module S-pair degree " + std::to_string(pr.lcm.deg) +
                        " exceeds cap " + std::to_string(opts_.degree_cap));
      add_element(reduce(spoly(pr)));
    }
    return finished_basis();
  }

  // Full normal form against the current basis.
  VTerms reduce(const VTerms& input) const {
    const F& k = ring_->field;
    std::map<VKey, Elem, VKeyGreater> work{VKeyGreater{&ord_}};
    for (const auto& t : input) work.emplace(t.k, t.c);
    VTerms out;
    while (!work.empty()) {
      auto it = work.begin();
      VKey key = it->first;
      Elem c = it->second;
      const VTerms* g = find_reducer(key);
      if (!g) {
        out.push_back({c, key});
        work.erase(it);
        continue;
      }
      work.erase(it);
      Monomial q = mono_div(key.m, (*g)[0].k.m);
      Elem s = k.div(c, (*g)[0].c);
      for (size_t j = 1; j < g->size(); ++j) {
        VKey kj{(*g)[j].k.comp, mono_mul((*g)[j].k.m, q)};
        Elem cj = k.mul(s, (*g)[j].c);
        auto [jt, fresh] = work.emplace(kj, k.neg(cj));
        if (!fresh) {
          jt->second = k.sub(jt->second, cj);
          if (k.is_zero(jt->second)) work.erase(jt);
        }
      }
    }
    return out;
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

  const VTerms* find_reducer(const VKey& key) const {
    for (const auto& g : basis_)
      if (g[0].k.comp == key.comp && mono_divides(g[0].k.m, key.m)) return &g;
    return nullptr;
  }

  VTerms spoly(const Pair& pr) {
    const F& k = ring_->field;
    const VTerms& f = basis_[pr.i];
    const VTerms& g = basis_[pr.j];
    Monomial qf = mono_div(pr.lcm, f[0].k.m), qg = mono_div(pr.lcm, g[0].k.m);
    Elem cf = k.inv(f[0].c), cg = k.inv(g[0].c);
    std::map<VKey, Elem, VKeyGreater> work{VKeyGreater{&ord_}};
    for (const auto& t : f)
      work.emplace(VKey{t.k.comp, mono_mul(t.k.m, qf)}, k.mul(t.c, cf));
    for (const auto& t : g) {
      VKey key{t.k.comp, mono_mul(t.k.m, qg)};
      Elem c = k.mul(t.c, cg);
      auto [it, fresh] = work.emplace(key, k.neg(c));
      if (!fresh) {
        it->second = k.sub(it->second, c);
        if (k.is_zero(it->second)) work.erase(it);
      }
    }
    VTerms out;
    for (auto& [key, c] : work)
      if (!k.is_zero(c)) out.push_back({c, key});
    return out;
  }

  void add_element(VTerms v) {
    if (v.empty()) return;
    normalize(v);
    size_t t = basis_.size();
    VKey L = v[0].k;
    basis_.push_back(std::move(v));
    // Pairs only form between elements with equal lead component.  The chain
    // criterion applies verbatim when all three lead components agree; the
    // coprimality criterion is NOT valid for modules and is never used.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (basis_[p.i][0].k.comp == L.comp && mono_divides(L.m, p.lcm) &&
          mono_lcm(basis_[p.i][0].k.m, L.m) != p.lcm &&
          mono_lcm(basis_[p.j][0].k.m, L.m) != p.lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (size_t i = 0; i < t; ++i) {
      if (basis_[i][0].k.comp != L.comp) continue;
      pairs_.insert(Pair{mono_lcm(basis_[i][0].k.m, L.m), i, t, &ord_});
    }
  }

  void normalize(VTerms& v) const {
    const F& k = ring_->field;
    Elem inv = k.inv(v[0].c);
    for (auto& t : v) t.c = k.mul(t.c, inv);
  }

  std::vector<VTerms> finished_basis() {
    // minimal: lead keys pairwise non-dividing (same component)
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const VKey& a = basis_[j][0].k;
        const VKey& b = basis_[i][0].k;
        if (a.comp == b.comp && mono_divides(a.m, b.m))
          if (a.m != b.m || j < i) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<VTerms> minimal;
    for (size_t i : keep) minimal.push_back(basis_[i]);
    // tail-reduce each element against the others
    std::vector<VTerms> out;
    for (size_t a = 0; a < minimal.size(); ++a) {
      ModuleEngine<F> sub(ring_, ord_, opts_);
      for (size_t b = 0; b < minimal.size(); ++b)
        if (b != a) sub.basis_.push_back(minimal[b]);
      VTerms red = sub.reduce(minimal[a]);
      normalize(red);
      out.push_back(std::move(red));
    }
    std::sort(out.begin(), out.end(), [&](const VTerms& x, const VTerms& y) {
      return vkey_cmp(x[0].k, y[0].k, ord_) < 0;
    });
    return out;
  }

  RingPtr<F> ring_;
  OrderSpec ord_;
  GBOptions opts_;
  std::vector<VTerms> basis_;
  std::set<Pair> pairs_;
};

}  // namespace detail

// Reduced Groebner basis of the submodule of R^t spanned by the given
// vectors, position-over-term order.  Vectors must all have length t.
template <class F>
std::vector<VecOfPoly<F>> module_groebner(const RingPtr<F>& ring,
                                          const std::vector<VecOfPoly<F>>& gens,
                                          GBOptions opts = {}) {
  size_t t = 0;
  for (const auto& g : gens) t = std::max(t, g.size());
  for (const auto& g : gens)
    if (g.size() != t)
      throw Error(ErrKind::BadSize, "module generators of unequal length");
  detail::ModuleEngine<F> eng(ring, ring->default_order, opts);
  auto basis = eng.run(gens);
  std::vector<VecOfPoly<F>> out;
  for (const auto& v : basis) out.push_back(eng.unflatten(v, (int)t));
  return out;
}

// Generators of the syzygy module of the given vectors g_1..g_k in R^t: all
// (a_1,..,a_k) with sum a_j g_j = 0.  Tags each g_j with e_{t+j} and runs the
// module algorithm; basis elements supported entirely in the tag block are
// exactly the syzygies (position-over-term makes any component < t lead).
template <class F>
std::vector<VecOfPoly<F>> syzygies(const RingPtr<F>& ring,
                                   const std::vector<VecOfPoly<F>>& gens,
                                   GBOptions opts = {}) {
  if (gens.empty()) return {};
  size_t t = gens[0].size();
  for (const auto& g : gens)
    if (g.size() != t)
      throw Error(ErrKind::BadSize, "module generators of unequal length");
  size_t k = gens.size();
  std::vector<VecOfPoly<F>> tagged;
  for (size_t j = 0; j < k; ++j) {
    VecOfPoly<F> v = gens[j];
    for (size_t i = 0; i < k; ++i)
      v.push_back(i == j ? Polynomial<F>::from_int(ring, 1)
                         : Polynomial<F>::zero(ring));
    tagged.push_back(std::move(v));
  }
  detail::ModuleEngine<F> eng(ring, ring->default_order, opts);
  auto basis = eng.run(tagged);
  std::vector<VecOfPoly<F>> out;
  for (const auto& v : basis) {
    if (v.empty() || v[0].k.comp < (int)t) continue;
    auto full = eng.unflatten(v, (int)(t + k));
    out.emplace_back(full.begin() + (long)t, full.end());
  }
  return out;
}

}  // namespace detvar
