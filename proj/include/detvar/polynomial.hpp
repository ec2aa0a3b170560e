// Sparse multivariate polynomials.  Terms are kept canonical: coefficients
// nonzero, monomials strictly decreasing in the ring's default order.  All
// binary operations check ring compatibility.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "detvar/ring.hpp"

namespace detvar {

template <class F>
struct Term {
  typename F::Elem c;
  Monomial m;
};

template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  // Builds a canonical polynomial from arbitrary (coeff, monomial) pairs:
  // sorts, merges duplicates, strips zeros.
  static Polynomial make(RingPtr<F> ring, std::vector<Term<F>> terms) {
    Polynomial p(ring);
    const OrderSpec& ord = ring->default_order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) {
                return mono_cmp(a.m, b.m, ord) > 0;
              });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m)
        p.terms_.back().c = ring->field.add(p.terms_.back().c, t.c);
      else
        p.terms_.push_back(std::move(t));
      if (!p.terms_.empty() && ring->field.is_zero(p.terms_.back().c))
        p.terms_.pop_back();
    }
    return p;
  }

  static Polynomial zero(RingPtr<F> ring) { return Polynomial(ring); }
  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({c, Monomial::unit()});
    return p;
  }
  static Polynomial from_int(RingPtr<F> ring, long long v) {
    return constant(ring, ring->field.from_int(v));
  }
  static Polynomial variable(RingPtr<F> ring, int i, int pow = 1) {
    Polynomial p(ring);
    if (i < 0 || i >= ring->nvars())
      throw Error(ErrKind::UnknownVariable, "variable index out of range");
    p.terms_.push_back({ring->field.one(), Monomial::var(i, pow)});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, const std::string& name) {
    return variable(ring, ring->index_of(name));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const Term<F>& leading_term() const {
    if (terms_.empty()) throw Error(ErrKind::BadSize, "zero polynomial");
    return terms_.front();
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_unit() &&
           ring_->field.eq(terms_[0].c, ring_->field.one());
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m ||
          !ring_->field.eq(terms_[i].c, o.terms_[i].c))
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = ring_->field.neg(t.c);
    return r;
  }
  Polynomial operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    return merge(o, false);
  }
  Polynomial operator-(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    return merge(o, true);
  }
  Polynomial operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const F& k = ring_->field;
    // accumulate through an ordered map; fine at kernel scales
    std::map<Monomial, Elem, MonoGreater> acc(MonoGreater{&ring_->default_order});
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        Monomial m = mono_mul(a.m, b.m);
        Elem c = k.mul(a.c, b.c);
        auto [it, fresh] = acc.emplace(m, c);
        if (!fresh) {
          it->second = k.add(it->second, c);
          if (k.is_zero(it->second)) acc.erase(it);
        }
      }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({c, m});
    return r;
  }
  Polynomial scaled(const Elem& c) const {
    Polynomial r(ring_);
    if (ring_->field.is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = ring_->field.mul(t.c, c);
    return r;
  }
  Polynomial times_term(const Elem& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (ring_->field.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({ring_->field.mul(t.c, c), mono_mul(t.m, m)});
    return r;
  }
  Polynomial pow(int e) const {
    if (e < 0) throw Error(ErrKind::BadSize, "negative exponent");
    Polynomial r = from_int(ring_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = e > 1 ? base * base : base;
      e >>= 1;
    }
    return r;
  }

  // Multidegree if homogeneous; nullopt otherwise (zero counts as
  // homogeneous of any degree and returns nullopt as well).
  std::optional<Multidegree> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    Multidegree d = ring_->mono_degree(terms_[0].m);
    for (size_t i = 1; i < terms_.size(); ++i)
      if (ring_->mono_degree(terms_[i].m) != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const {
    return terms_.empty() || homogeneous_degree().has_value();
  }
  Multidegree required_degree() const {
    auto d = homogeneous_degree();
    if (!d)
      throw Error(ErrKind::InhomogeneousInput, "polynomial is not homogeneous");
    return *d;
  }

  Polynomial derivative(int var) const {
    std::vector<Term<F>> out;
    for (const auto& t : terms_) {
      if (!t.m.e[var]) continue;
      Monomial m = t.m;
      Elem c = ring_->field.mul(t.c, ring_->field.from_int(m.e[var]));
      m.deg -= 1;
      m.e[var] -= 1;
      if (!ring_->field.is_zero(c)) out.push_back({c, m});
    }
    return make(ring_, std::move(out));
  }

  // Ring morphism: variable i of this ring maps to images[i] (a polynomial
  // over the target ring).  Evaluates with per-variable power caching.
  Polynomial substitute(const RingPtr<F>& target,
                        const std::vector<Polynomial>& images) const {
    if ((int)images.size() != ring_->nvars())
      throw Error(ErrKind::BadSize, "one image per variable required");
    for (const auto& im : images) check_same_ring(im.ring(), target);
    std::vector<std::vector<Polynomial>> powers(ring_->nvars());
    Polynomial acc = zero(target);
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.c);
      for (int v = 0; v < ring_->nvars(); ++v) {
        int e = t.m.e[v];
        if (!e) continue;
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(from_int(target, 1));
        while ((int)pw.size() <= e) pw.push_back(pw.back() * images[v]);
        prod = prod * pw[e];
      }
      acc = acc + prod;
    }
    return acc;
  }

  // Maps this polynomial into `target` sending variables to their namesakes;
  // variables missing from the target go to zero (projection convention).
  Polynomial map_by_name(const RingPtr<F>& target) const {
    std::vector<Polynomial> images;
    images.reserve(ring_->nvars());
    for (const auto& v : ring_->vars)
      images.push_back(target->has_var(v) ? variable(target, v)
                                          : zero(target));
    return substitute(target, images);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const F& k = ring_->field;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      std::string c = k.str(t.c);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      s += i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (int v = 0; v < ring_->nvars(); ++v) {
        if (!t.m.e[v]) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->vars[v];
        if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
      }
      if (mono.empty())
        s += c;
      else if (c == "1")
        s += mono;
      else
        s += c + "*" + mono;
    }
    return s;
  }

 private:
  Polynomial merge(const Polynomial& o, bool subtract) const {
    const F& k = ring_->field;
    const OrderSpec& ord = ring_->default_order;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp;
      if (i == terms_.size())
        cmp = -1;
      else if (j == o.terms_.size())
        cmp = 1;
      else
        cmp = mono_cmp(terms_[i].m, o.terms_[j].m, ord);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        Term<F> t = o.terms_[j++];
        if (subtract) t.c = k.neg(t.c);
        r.terms_.push_back(std::move(t));
      } else {
        Elem c = subtract ? k.sub(terms_[i].c, o.terms_[j].c)
                          : k.add(terms_[i].c, o.terms_[j].c);
        if (!k.is_zero(c)) r.terms_.push_back({c, terms_[i].m});
        ++i, ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

// All monomials of the given multidegree, in decreasing default order.
// Throws EmptyDegree if none exist.
template <class F>
std::vector<Monomial> monomials_of_degree(const RingPtr<F>& ring,
                                          const Multidegree& d) {
  if (d.size() != ring->grading_rank)
    throw Error(ErrKind::BadSize, "wrong multidegree rank");
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, Multidegree)> rec = [&](int v, Multidegree rest) {
    bool restZero = true;
    for (auto x : rest)
      if (x) {
        restZero = false;
        break;
      }
    if (v == ring->nvars()) {
      if (restZero) out.push_back(cur);
      return;
    }
    const Multidegree& dv = ring->degs[v];
    // exponent bound: for any coordinate with dv[j] > 0, e <= rest[j]/dv[j]
    long long maxe = -1;
    for (size_t j = 0; j < dv.size(); ++j) {
      if (dv[j] > 0) {
        long long cap = rest[j] >= 0 ? rest[j] / dv[j] : -1;
        maxe = maxe < 0 ? cap : std::min(maxe, cap);
      }
    }
    if (maxe < 0) maxe = 0;  // degree vector must have a positive entry
    for (long long e = 0; e <= maxe; ++e) {
      Multidegree nrest = rest;
      bool ok = true;
      for (size_t j = 0; j < dv.size(); ++j) {
        nrest[j] -= e * dv[j];
        if (nrest[j] < 0) ok = false;  // only valid when all degs nonneg
      }
      if (!ok) continue;
      cur.e[v] = (uint16_t)e;
      cur.deg += (uint32_t)e;
      rec(v + 1, nrest);
      cur.deg -= (uint32_t)e;
      cur.e[v] = 0;
    }
  };
  rec(0, d);
  if (out.empty())
    throw Error(ErrKind::EmptyDegree,
                "no monomials of degree " + deg_str(d));
  const OrderSpec& ord = ring->default_order;
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, ord) > 0;
  });
  return out;
}

// Dense random form of the given multidegree, deterministic in the seed.
template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, const Multidegree& d,
                          uint64_t seed) {
  auto monos = monomials_of_degree(ring, d);
  Rng rng(seed);
  std::vector<Term<F>> terms;
  terms.reserve(monos.size());
  for (const auto& m : monos) {
    auto c = ring->field.random(rng);
    if (!ring->field.is_zero(c)) terms.push_back({c, m});
  }
  return Polynomial<F>::make(ring, std::move(terms));
}

}  // namespace detvar
