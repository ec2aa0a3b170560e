// Term orders: graded reverse lexicographic, lexicographic, and block orders
// (the elimination workhorse).  An OrderSpec is a value object with a stable
// string key so Groebner bases can be cached per (ideal, order).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detvar/monomial.hpp"

namespace detvar {

enum class OrderKind { Grevlex, Lex };

struct OrderBlock {
  std::vector<int> vars;  // variable indices, ascending
  OrderKind kind = OrderKind::Grevlex;
};

struct OrderSpec {
  // A single block covering all variables is the common case; elimination
  // orders list the eliminated variables in an earlier block.
  std::vector<OrderBlock> blocks;

  static OrderSpec grevlex(int nvars) {
    OrderSpec o;
    OrderBlock b;
    for (int i = 0; i < nvars; ++i) b.vars.push_back(i);
    b.kind = OrderKind::Grevlex;
    o.blocks.push_back(std::move(b));
    return o;
  }
  static OrderSpec lex(int nvars) {
    OrderSpec o = grevlex(nvars);
    o.blocks[0].kind = OrderKind::Lex;
    return o;
  }
  // Eliminates `first` (compared first, grevlex within), remaining variables
  // of [0, nvars) follow in a second grevlex block.
  static OrderSpec elimination(const std::vector<int>& first, int nvars) {
    OrderSpec o;
    OrderBlock b1;
    b1.vars = first;
    o.blocks.push_back(std::move(b1));
    OrderBlock b2;
    std::vector<bool> used(nvars, false);
    for (int v : o.blocks[0].vars) used[v] = true;
    for (int i = 0; i < nvars; ++i)
      if (!used[i]) b2.vars.push_back(i);
    if (!b2.vars.empty()) o.blocks.push_back(std::move(b2));
    return o;
  }

  std::string key() const {
    std::string s;
    for (const auto& b : blocks) {
      s += b.kind == OrderKind::Grevlex ? "g[" : "l[";
      for (size_t i = 0; i < b.vars.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(b.vars[i]);
      }
      s += ']';
    }
    return s;
  }
  bool operator==(const OrderSpec& o) const { return key() == o.key(); }
};

// Returns +1 if a > b, -1 if a < b, 0 if equal.
inline int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
  if (a == b) return 0;
  for (const auto& blk : ord.blocks) {
    long long da = 0, db = 0;
    for (int v : blk.vars) {
      da += a.e[v];
      db += b.e[v];
    }
    if (blk.kind == OrderKind::Grevlex) {
      if (da != db) return da > db ? 1 : -1;
      // reverse lex tie-break: last variable with differing exponent, the
      // smaller exponent wins
      for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
        if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
      }
    } else {  // Lex
      for (int v : blk.vars) {
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      }
      if (da != db) return da > db ? 1 : -1;  // unreachable for full blocks
    }
  }
  return 0;
}

// Comparator adapters.
struct MonoLess {
  const OrderSpec* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, *ord) < 0;
  }
};
struct MonoGreater {
  const OrderSpec* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, *ord) > 0;
  }
};

}  // namespace detvar
