#pragma once

// Text format for ad-hoc ideals:
//
//   ring: vars=y0,y1,y2,y3; degrees=1,1,1,1; field=q
//   y1^2 - y0*y2
//   y1*y2 - y0*y3
//
// The header names the variables, their (multi)degrees — single integers or
// parenthesized tuples like (1,0),(0,1) — and the coefficient field.  Every
// following non-empty line is one generator in the grammar
//   term ::= [coeff "*"] var ("^" int)? ("*" var ("^" int)?)*
// joined by + / -; a bare integer (or n/d over the rationals) is also a
// valid term.  Lines starting with '#' are comments.  Errors carry line and
// column positions.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "detvar/polynomial.hpp"
#include "detvar/ring.hpp"

namespace detvar {

struct IdealFile {
  FieldSpec field;
  std::vector<std::string> vars;
  std::vector<Multidegree> degs;
  std::vector<std::pair<int, std::string>> generator_lines;  // (lineno, text)
};

namespace detail {

struct LineScanner {
  const std::string& s;
  int line;
  size_t i = 0;

  int col() const { return (int)i + 1; }
  bool eof() const { return i >= s.size(); }
  char peek() const { return eof() ? '\0' : s[i]; }
  void skip_ws() {
    while (!eof() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col(), msg);
  }
  bool consume(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    if (!std::isdigit((unsigned char)peek())) fail("expected an integer");
    long long v = 0;
    while (std::isdigit((unsigned char)peek())) {
      v = v * 10 + (s[i] - '0');
      if (v > (1LL << 40)) fail("integer literal too large");
      ++i;
    }
    return v;
  }
  std::string identifier() {
    if (!std::isalpha((unsigned char)peek())) fail("expected a variable name");
    size_t start = i;
    while (std::isalnum((unsigned char)peek()) || peek() == '_') ++i;
    return s.substr(start, i - start);
  }
};

inline std::vector<std::string> split_semicolons(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

// Splits a file into ring header and generator lines (field-independent).
inline IdealFile parse_ideal_file(const std::string& text) {
  IdealFile out;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  int lineno = 0;
  bool have_header = false;
  bool have_vars = false, have_degs = false, have_field = false;
  for (const auto& raw : lines) {
    ++lineno;
    auto line = detail::strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      if (line.rfind("ring:", 0) != 0)
        throw ParseError(lineno, 1, "first statement must be a 'ring:' header");
      auto body = line.substr(5);
      for (auto& clause : detail::split_semicolons(body)) {
        auto c = detail::strip(clause);
        if (c.empty()) continue;
        auto eq = c.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, 1, "header clause needs key=value: " + c);
        auto key = detail::strip(c.substr(0, eq));
        auto val = detail::strip(c.substr(eq + 1));
        if (key == "vars") {
          std::string cur;
          for (char ch : val + ",") {
            if (ch == ',') {
              auto v = detail::strip(cur);
              if (!v.empty()) out.vars.push_back(v);
              cur.clear();
            } else {
              cur += ch;
            }
          }
          have_vars = true;
        } else if (key == "degrees") {
          detail::LineScanner sc{val, lineno, 0};
          sc.skip_ws();
          while (!sc.eof()) {
            Multidegree d;
            if (sc.consume('(')) {
              while (true) {
                sc.skip_ws();
                bool neg = sc.consume('-');
                long long v = sc.integer();
                d.push_back(neg ? -v : v);
                sc.skip_ws();
                if (sc.consume(')')) break;
                sc.expect(',');
              }
            } else {
              d.push_back(sc.integer());
            }
            out.degs.push_back(d);
            sc.skip_ws();
            if (!sc.eof()) sc.expect(',');
            sc.skip_ws();
          }
          have_degs = true;
        } else if (key == "field") {
          out.field = FieldSpec::parse(val);
          have_field = true;
        } else {
          throw ParseError(lineno, 1, "unknown header key '" + key + "'");
        }
      }
      if (!have_vars || !have_field)
        throw ParseError(lineno, 1, "ring header needs vars= and field=");
      if (!have_degs)
        out.degs.assign(out.vars.size(), Multidegree{1});
      if (out.degs.size() != out.vars.size())
        throw ParseError(lineno, 1, "degrees count does not match vars");
      have_header = true;
    } else {
      out.generator_lines.emplace_back(lineno, line);
    }
  }
  if (!have_header) throw ParseError(1, 1, "empty input: no ring header");
  return out;
}

// One polynomial in the term grammar over the given ring.
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const std::string& text,
                               int lineno = 1) {
  using Elem = typename F::Elem;
  const F& k = ring->field;
  detail::LineScanner sc{text, lineno, 0};
  auto acc = Polynomial<F>::zero(ring);

  sc.skip_ws();
  if (sc.eof()) sc.fail("empty polynomial");
  bool first = true;
  while (true) {
    sc.skip_ws();
    if (sc.eof()) {
      if (first) sc.fail("empty polynomial");
      break;
    }
    bool neg = false;
    if (sc.consume('-')) {
      neg = true;
    } else if (sc.consume('+')) {
      if (first) sc.fail("polynomial cannot start with '+'");
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    sc.skip_ws();

    Elem coeff = k.one();
    bool saw_coeff = false;
    if (std::isdigit((unsigned char)sc.peek())) {
      long long num = sc.integer();
      Elem c = k.from_int(num);
      if (sc.consume('/')) {
        long long den = sc.integer();
        if (den == 0) sc.fail("zero denominator");
        c = k.div(c, k.from_int(den));
      }
      coeff = c;
      saw_coeff = true;
    }
    if (neg) coeff = k.neg(coeff);

    Monomial mono;
    bool saw_var = false;
    bool expect_factor = false;
    if (saw_coeff) {
      sc.skip_ws();
      if (sc.consume('*')) {
        expect_factor = true;
        sc.skip_ws();
      }
    }
    while (expect_factor || std::isalpha((unsigned char)sc.peek())) {
      auto name = sc.identifier();
      int vi = ring->index_of(name);
      if (vi < 0)
        throw ParseError(lineno, sc.col() - (int)name.size(),
                         "unknown variable '" + name + "'");
      long long e = 1;
      if (sc.consume('^')) e = sc.integer();
      if (e < 1 || e > (long long)kMaxExponent) sc.fail("exponent out of range");
      mono = mono_mul(mono, Monomial::var(vi, (int)e));
      saw_var = true;
      sc.skip_ws();
      expect_factor = false;
      if (sc.consume('*')) {
        expect_factor = true;
        sc.skip_ws();
      }
    }
    if (!saw_coeff && !saw_var) sc.fail("expected a term");
    if (expect_factor) sc.fail("dangling '*'");

    acc = acc + Polynomial<F>::make(ring, {{coeff, mono}});
    first = false;
  }
  return acc;
}

template <class F>
struct ParsedIdeal {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;
};

template <class F>
ParsedIdeal<F> materialize_ideal(const IdealFile& file) {
  ParsedIdeal<F> out;
  F field = field_from_spec<F>(file.field);
  out.ring = ring_create<F>(field, file.vars, file.degs);
  for (const auto& [ln, text] : file.generator_lines)
    out.gens.push_back(parse_polynomial<F>(out.ring, text, ln));
  return out;
}

}  // namespace detvar
