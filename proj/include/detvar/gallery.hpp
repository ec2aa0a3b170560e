#pragma once

// The determinantal family and its verification procedures.
//
// For b >= 1 the context builds, over P^2 x P^3, the 2x4 matrix
//   m = [ psi * K | B * x^t ]
// where psi is the 2x3 catalecticant in y, K the 3x3 Koszul matrix in x and
// B a 2x3 matrix of degree-b forms (opaque variables in generic mode, seeded
// random forms in random mode).  The rank-one locus of m is a threefold X;
// the procedures below machine-check its geometry: the component splitting
// over the twisted cubic, the (2, b+1) hypersurface model in P^1 x P^3, the
// (b+1)^3 nodes of the associated double cover, the tangency of the cubic
// against the branch surface with its residual curves, the base loci of the
// two small resolutions, and the cone/involution combinatorics.
//
// Every procedure is deterministic in (b, field, mode, seed) and reports
// named witnesses; `status` is "pass" only if every required sub-assertion
// held.  Genericity failures of a random specialization throw RetrySeed so
// the caller can rerun with a derived seed.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "detvar/cohomology.hpp"
#include "detvar/cones.hpp"
#include "detvar/hilbert.hpp"
#include "detvar/ideal.hpp"
#include "detvar/matrix.hpp"
#include "detvar/module_gb.hpp"
#include "detvar/resolution.hpp"

namespace detvar {

enum class Mode { Generic, Random };

inline std::string mode_name(Mode m) {
  return m == Mode::Generic ? "generic" : "random";
}

inline Mode mode_parse(const std::string& s) {
  if (s == "generic") return Mode::Generic;
  if (s == "random") return Mode::Random;
  throw Error(ErrKind::ParseError, "bad mode '" + s + "' (generic|random)");
}

struct GalleryOptions {
  // Run the heavy elimination/saturation pipelines in generic-symbolic mode
  // too (they always run in random mode).
  bool slow = false;
};

struct VerificationReport {
  std::string check;
  int b = 1;
  std::string field;
  uint64_t seed = 0;
  std::string status = "pass";  // pass | fail | skipped
  std::vector<std::pair<std::string, std::string>> witnesses;
  long long wall_ms = 0;

  void note(const std::string& k, const std::string& v) {
    witnesses.emplace_back(k, v);
  }
  void require(const std::string& k, bool ok) {
    witnesses.emplace_back(k, ok ? "ok" : "FAILED");
    if (!ok) status = "fail";
  }
  void require_eq(const std::string& k, long long got, long long want) {
    if (got == want) {
      witnesses.emplace_back(k, std::to_string(got));
    } else {
      witnesses.emplace_back(k, "got " + std::to_string(got) + ", want " +
                                    std::to_string(want));
      status = "fail";
    }
  }
  void skip(const std::string& why) {
    status = "skipped";
    witnesses.emplace_back("skipped", why);
  }
  bool passed() const { return status == "pass"; }
};

template <class F>
struct ConstructionContext {
  int b = 1;
  Mode mode = Mode::Random;
  uint64_t seed = 0;
  FieldSpec fspec;

  RingPtr<F> p3;      // y0..y3
  RingPtr<F> p2p3;    // x0..x2 | y0..y3
  RingPtr<F> p1p3;    // z0 z1 | y0..y3
  RingPtr<F> p1p2p3;  // x | y | z
  RingPtr<F> rw;      // z | y, plus w of degree (0, b+1)

  // Random mode: the six specialized entries of B as forms in p3 (row-major
  // b_ij at index 3i+j).  Empty in generic mode, where b_ij are variables.
  std::vector<Polynomial<F>> bforms;

  using P = Polynomial<F>;

  P bentry(int i, int j, const RingPtr<F>& R) const {
    if (mode == Mode::Generic)
      return P::variable(R, "b" + std::to_string(i) + std::to_string(j));
    return bforms[3 * i + j].map_by_name(R);
  }

  P var(const RingPtr<F>& R, const std::string& n) const {
    return P::variable(R, n);
  }

  // 2x3 catalecticant ((y0,y1,y2),(y1,y2,y3)).
  PolyMatrix<F> catalecticant(const RingPtr<F>& R) const {
    auto y = [&](int i) { return var(R, "y" + std::to_string(i)); };
    return poly_matrix<F>(R, {{y(0), y(1), y(2)}, {y(1), y(2), y(3)}});
  }

  // 3x3 Koszul matrix of (x0,x1,x2): K*x^t = 0.
  PolyMatrix<F> koszul_x(const RingPtr<F>& R) const {
    auto x = [&](int i) { return var(R, "x" + std::to_string(i)); };
    auto z = P::zero(R);
    return poly_matrix<F>(R, {{z, -x(2), x(1)},
                              {x(2), z, -x(0)},
                              {-x(1), x(0), z}});
  }

  PolyMatrix<F> bmatrix(const RingPtr<F>& R) const {
    return poly_matrix<F>(R, {{bentry(0, 0, R), bentry(0, 1, R), bentry(0, 2, R)},
                              {bentry(1, 0, R), bentry(1, 1, R), bentry(1, 2, R)}});
  }

  // The 2x4 presentation matrix [ psi*K | B*x^t ] over p2p3 (or p1p2p3).
  PolyMatrix<F> presentation(const RingPtr<F>& R) const {
    auto pk = mat_mul(catalecticant(R), koszul_x(R));
    auto bm = bmatrix(R);
    auto x = [&](int i) { return var(R, "x" + std::to_string(i)); };
    std::vector<std::vector<P>> rows(2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 3; ++c) rows[r].push_back(pk.at(r, c));
      rows[r].push_back(bm.at(r, 0) * x(0) + bm.at(r, 1) * x(1) +
                        bm.at(r, 2) * x(2));
    }
    return poly_matrix<F>(R, rows);
  }

  // u_j = z0*y_j + z1*y_{j+1} (row vector (z0,z1) applied to psi).
  P ucoord(int j, const RingPtr<F>& R) const {
    return var(R, "z0") * var(R, "y" + std::to_string(j)) +
           var(R, "z1") * var(R, "y" + std::to_string(j + 1));
  }

  // zb_j = z0*b0j + z1*b1j.
  P zb(int j, const RingPtr<F>& R) const {
    return var(R, "z0") * bentry(0, j, R) + var(R, "z1") * bentry(1, j, R);
  }

  // 3x4 matrix N with x*N = (z0,z1)*m; needs z and y (and b) in R.
  PolyMatrix<F> nmatrix(const RingPtr<F>& R) const {
    auto z = P::zero(R);
    auto u = [&](int j) { return ucoord(j, R); };
    return poly_matrix<F>(R, {{z, u(2), -u(1), zb(0, R)},
                              {-u(2), z, u(0), zb(1, R)},
                              {u(1), -u(0), z, zb(2, R)}});
  }

  // Diagonal/mixed coefficients of the symmetric model: f = a0*z0^2 +
  // 2*a1*z0*z1 + a2*z1^2.
  P acoeff(int k, const RingPtr<F>& R) const {
    auto y = [&](int i) { return var(R, "y" + std::to_string(i)); };
    auto bb = [&](int i, int j) { return bentry(i, j, R); };
    auto two = P::from_int(R, 2);
    switch (k) {
      case 0:
        return two * (y(0) * bb(0, 0) + y(1) * bb(0, 1) + y(2) * bb(0, 2));
      case 1:
        return y(0) * bb(1, 0) + y(1) * bb(1, 1) + y(2) * bb(1, 2) +
               y(1) * bb(0, 0) + y(2) * bb(0, 1) + y(3) * bb(0, 2);
      case 2:
        return two * (y(1) * bb(1, 0) + y(2) * bb(1, 1) + y(3) * bb(1, 2));
      default:
        throw Error(ErrKind::BadSize, "acoeff index out of range");
    }
  }

  PolyMatrix<F> symmetric_model(const RingPtr<F>& R) const {
    auto a0 = acoeff(0, R), a1 = acoeff(1, R), a2 = acoeff(2, R);
    return poly_matrix<F>(R, {{a0, a1}, {a1, a2}});
  }

  P hypersurface(const RingPtr<F>& R) const {
    auto z0 = var(R, "z0"), z1 = var(R, "z1");
    return acoeff(0, R) * z0 * z0 +
           P::from_int(R, 2) * acoeff(1, R) * z0 * z1 +
           acoeff(2, R) * z1 * z1;
  }

  P branch_determinant(const RingPtr<F>& R) const {
    return acoeff(0, R) * acoeff(2, R) - acoeff(1, R) * acoeff(1, R);
  }

  // The form whose square is minus the branch determinant along the cubic.
  P tangency_cofactor(const RingPtr<F>& R) const {
    auto y = [&](int i) { return var(R, "y" + std::to_string(i)); };
    auto bb = [&](int i, int j) { return bentry(i, j, R); };
    return y(1) * bb(0, 0) + y(2) * bb(0, 1) + y(3) * bb(0, 2) -
           y(0) * bb(1, 0) - y(1) * bb(1, 1) - y(2) * bb(1, 2);
  }

  Ideal<F> twisted_cubic(const RingPtr<F>& R) const {
    return minors_ideal(catalecticant(R), 2);
  }

  // 2x5 matrix whose 2x2 minors cut the strict transform of the cubic in X.
  PolyMatrix<F> cubic_transform_matrix(const RingPtr<F>& R) const {
    auto y = [&](int i) { return var(R, "y" + std::to_string(i)); };
    auto x = [&](int i) { return var(R, "x" + std::to_string(i)); };
    return poly_matrix<F>(R, {{y(0), y(1), y(2), x(0), x(1)},
                              {y(1), y(2), y(3), x(1), x(2)}});
  }

  // 2x4 matrix whose 2x2 minors cut the exceptional curve in P^1 x P^3.
  PolyMatrix<F> exceptional_curve_matrix(const RingPtr<F>& R) const {
    auto y = [&](int i) { return var(R, "y" + std::to_string(i)); };
    return poly_matrix<F>(R, {{y(0), y(1), y(2), -var(R, "z1")},
                              {y(1), y(2), y(3), var(R, "z0")}});
  }

  // 3x3 matrix B^t * J * psi (J the standard symplectic 2x2); the extra
  // generators of the exceptional surface are x * this matrix.
  PolyMatrix<F> pencil_matrix(const RingPtr<F>& R) const {
    auto jj = poly_matrix<F>(R, {{P::zero(R), P::from_int(R, 1)},
                                 {P::from_int(R, -1), P::zero(R)}});
    return mat_mul(mat_mul(mat_transpose(bmatrix(R)), jj), catalecticant(R));
  }

  Ideal<F> exceptional_surface(const RingPtr<F>& R) const {
    auto gens = minors(catalecticant(R), 2);
    auto bby = pencil_matrix(R);
    auto x = [&](int i) { return var(R, "x" + std::to_string(i)); };
    for (int c = 0; c < 3; ++c)
      gens.push_back(x(0) * bby.at(0, c) + x(1) * bby.at(1, c) +
                     x(2) * bby.at(2, c));
    return Ideal<F>(R, gens);
  }

  // 5x5 alternating matrix whose principal 4x4 Pfaffians cut the residual
  // curve of the cubic inside the hypersurface model.
  PolyMatrix<F> residual_pfaffian_matrix(const RingPtr<F>& R) const {
    auto y = [&](int i) { return var(R, "y" + std::to_string(i)); };
    auto zero = P::zero(R);
    auto w0 = zb(0, R), w1 = zb(1, R), w2 = zb(2, R);
    return poly_matrix<F>(R,
                          {{zero, zero, y(0), y(1), y(2)},
                           {zero, zero, y(1), y(2), y(3)},
                           {-y(0), -y(1), zero, w2, -w1},
                           {-y(1), -y(2), -w2, zero, w0},
                           {-y(2), -y(3), w1, -w0, zero}});
  }

  Ideal<F> residual_curve(const RingPtr<F>& R) const {
    return Ideal<F>(R, principal_pfaffians(residual_pfaffian_matrix(R)));
  }

  // Generators of the rank-one ideal pulled back to P^1 x P^2 x P^3:
  // (z0,z1) * m, four forms.
  std::vector<P> incidence_generators() const {
    auto m = presentation(p1p2p3);
    std::vector<P> out;
    for (int c = 0; c < 4; ++c)
      out.push_back(var(p1p2p3, "z0") * m.at(0, c) +
                    var(p1p2p3, "z1") * m.at(1, c));
    return out;
  }

  Ideal<F> incidence_ideal() const {
    return Ideal<F>(p1p2p3, incidence_generators());
  }

  // Annihilator of coker(m) over p2p3: intersection over the two unit
  // vectors e_i of the colon ideals (im m : e_i), each read off the first
  // coordinates of the syzygies of [e_i | m].  Cached (module computation).
  const Ideal<F>& threefold_ideal() const {
    auto it = cache_->ideals.find("ann");
    if (it != cache_->ideals.end()) return it->second;
    auto m = presentation(p2p3);
    std::vector<VecOfPoly<F>> cols;
    for (int c = 0; c < 4; ++c) cols.push_back({m.at(0, c), m.at(1, c)});
    auto colon_part = [&](int i) {
      std::vector<VecOfPoly<F>> gens;
      VecOfPoly<F> e = {P::zero(p2p3), P::zero(p2p3)};
      e[i] = P::from_int(p2p3, 1);
      gens.push_back(e);
      for (const auto& c : cols) gens.push_back(c);
      auto syz = syzygies(p2p3, gens);
      std::vector<P> out;
      for (const auto& s : syz) out.push_back(s[0]);
      return Ideal<F>(p2p3, out);
    };
    auto ann = ideal_intersect(colon_part(0), colon_part(1));
    return cache_->ideals.emplace("ann", std::move(ann)).first->second;
  }

  Ideal<F> variables_ideal(const RingPtr<F>& R,
                           const std::vector<std::string>& names) const {
    std::vector<P> gens;
    for (const auto& n : names) gens.push_back(var(R, n));
    return Ideal<F>(R, gens);
  }

  std::vector<std::string> xnames() const { return {"x0", "x1", "x2"}; }
  std::vector<std::string> ynames() const { return {"y0", "y1", "y2", "y3"}; }
  std::vector<std::string> znames() const { return {"z0", "z1"}; }

 private:
  struct Cache {
    std::map<std::string, Ideal<F>> ideals;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

namespace detail {

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrKind::RingMismatch, "construction invariant: " + what);
}

}  // namespace detail

template <class F>
ConstructionContext<F> build_context(int b, const FieldSpec& fs, Mode mode,
                                     uint64_t seed) {
  if (b < 1) throw Error(ErrKind::BadSize, "b must be >= 1");
  if (fs.characteristic() == 2)
    throw Error(ErrKind::BadCharacteristic, "characteristic 2 not supported");
  F field = field_from_spec<F>(fs);

  ConstructionContext<F> ctx;
  ctx.b = b;
  ctx.mode = mode;
  ctx.seed = seed;
  ctx.fspec = fs;

  auto build_ring = [&](std::vector<std::pair<std::string, Multidegree>> vs,
                        Multidegree bdeg) {
    std::vector<std::string> names;
    std::vector<Multidegree> degs;
    for (auto& [n, d] : vs) {
      names.push_back(n);
      degs.push_back(d);
    }
    if (mode == Mode::Generic) {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
          names.push_back("b" + std::to_string(i) + std::to_string(j));
          degs.push_back(bdeg);
        }
    }
    return ring_create<F>(field, std::move(names), std::move(degs));
  };

  long long B = b;
  ctx.p3 = build_ring({{"y0", {1}}, {"y1", {1}}, {"y2", {1}}, {"y3", {1}}},
                      {B});
  ctx.p2p3 = build_ring({{"x0", {1, 0}},
                         {"x1", {1, 0}},
                         {"x2", {1, 0}},
                         {"y0", {0, 1}},
                         {"y1", {0, 1}},
                         {"y2", {0, 1}},
                         {"y3", {0, 1}}},
                        {0, B});
  ctx.p1p3 = build_ring({{"z0", {1, 0}},
                         {"z1", {1, 0}},
                         {"y0", {0, 1}},
                         {"y1", {0, 1}},
                         {"y2", {0, 1}},
                         {"y3", {0, 1}}},
                        {0, B});
  ctx.p1p2p3 = build_ring({{"x0", {1, 0, 0}},
                           {"x1", {1, 0, 0}},
                           {"x2", {1, 0, 0}},
                           {"y0", {0, 1, 0}},
                           {"y1", {0, 1, 0}},
                           {"y2", {0, 1, 0}},
                           {"y3", {0, 1, 0}},
                           {"z0", {0, 0, 1}},
                           {"z1", {0, 0, 1}}},
                          {0, B, 0});
  ctx.rw = build_ring({{"z0", {1, 0}},
                       {"z1", {1, 0}},
                       {"y0", {0, 1}},
                       {"y1", {0, 1}},
                       {"y2", {0, 1}},
                       {"y3", {0, 1}},
                       {"w", {0, B + 1}}},
                      {0, B});

  if (mode == Mode::Random) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j)
        ctx.bforms.push_back(random_form<F>(
            ctx.p3, Multidegree{B}, Rng::mix(seed, 101 + 10 * i + j)));
    // Genericity guard: the rank-one loci of B and of the catalecticant must
    // not meet in P^3 (the proof's emptiness condition for general B).
    auto guard = ideal_sum(minors_ideal(ctx.bmatrix(ctx.p3), 2),
                           ctx.twisted_cubic(ctx.p3));
    if (hilbert_data(guard).affine_dim != 0)
      throw Error(ErrKind::RetrySeed,
                  "rank-degenerate specialization of B; pick another seed");
  }

  // Construction identities that must hold in any mode.
  {
    auto R = ctx.p1p2p3;
    auto m = ctx.presentation(R);
    auto N = ctx.nmatrix(R);
    auto x = [&](int i) {
      return Polynomial<F>::variable(R, "x" + std::to_string(i));
    };
    auto z0 = Polynomial<F>::variable(R, "z0");
    auto z1 = Polynomial<F>::variable(R, "z1");
    for (int c = 0; c < 4; ++c) {
      auto lhs = x(0) * N.at(0, c) + x(1) * N.at(1, c) + x(2) * N.at(2, c);
      auto rhs = z0 * m.at(0, c) + z1 * m.at(1, c);
      detail::internal_check(lhs == rhs, "x*N = z*m");
    }
  }
  {
    auto f = ctx.hypersurface(ctx.p1p3);
    auto d = f.homogeneous_degree();
    detail::internal_check(d && (*d)[0] == 2 && (*d)[1] == B + 1,
                           "f homogeneous of bidegree (2, b+1)");
  }
  return ctx;
}

// Special fiber with B supported on two pencils of distinct roots: the node
// scheme becomes a grid of (b+1)^3 explicit points.
template <class F>
struct SpecialFiber {
  RingPtr<F> p3;
  Polynomial<F> a0, a1, a2;       // symmetric-model coefficients
  Polynomial<F> b01, b11;         // the two nontrivial entries of B
  std::array<Polynomial<F>, 6> bentries;  // row-major b_ij
};

template <class F>
SpecialFiber<F> build_special_fiber(int b, const FieldSpec& fs,
                                    const std::vector<long long>& lambda,
                                    const std::vector<long long>& mu) {
  if (b < 1) throw Error(ErrKind::BadSize, "b must be >= 1");
  if ((int)lambda.size() != b + 1 || (int)mu.size() != b + 1)
    throw Error(ErrKind::BadSize, "need b+1 roots per pencil");
  for (size_t i = 0; i < lambda.size(); ++i)
    for (size_t j = i + 1; j < lambda.size(); ++j)
      if (lambda[i] == lambda[j] || mu[i] == mu[j])
        throw Error(ErrKind::DegenerateParameters,
                    "pencil roots must be pairwise distinct");
  F field = field_from_spec<F>(fs);
  if (fs.characteristic() == 2)
    throw Error(ErrKind::BadCharacteristic, "characteristic 2 not supported");

  SpecialFiber<F> sf;
  sf.p3 = ring_standard<F>(field, {"y0", "y1", "y2", "y3"});
  using P = Polynomial<F>;
  auto y = [&](int i) { return P::variable(sf.p3, "y" + std::to_string(i)); };

  auto pencil = [&](const P& u, const P& v, const std::vector<long long>& rt) {
    auto prod = P::from_int(sf.p3, 1);
    for (auto r : rt) prod = prod * (u - P::from_int(sf.p3, r) * v);
    return prod;
  };
  auto prod_l = pencil(y(0), y(1), lambda);  // Pi (y0 - lambda_i y1)
  auto prod_m = pencil(y(3), y(2), mu);      // Pi (y3 - mu_j y2)

  auto b01 = exact_divide(prod_l - y(0).pow(b + 1), y(1));
  auto b11 = exact_divide(prod_m - y(3).pow(b + 1), y(2));
  detail::internal_check(b01 && b11, "pencil remainders divisible");
  sf.b01 = *b01;
  sf.b11 = *b11;
  auto zero = P::zero(sf.p3);
  sf.bentries = {y(0).pow(b), sf.b01, zero, zero, sf.b11, y(3).pow(b)};

  auto be = [&](int i, int j) { return sf.bentries[3 * i + j]; };
  auto two = P::from_int(sf.p3, 2);
  sf.a0 = two * (y(0) * be(0, 0) + y(1) * be(0, 1) + y(2) * be(0, 2));
  sf.a1 = y(0) * be(1, 0) + y(1) * be(1, 1) + y(2) * be(1, 2) +
          y(1) * be(0, 0) + y(2) * be(0, 1) + y(3) * be(0, 2);
  sf.a2 = two * (y(1) * be(1, 0) + y(2) * be(1, 1) + y(3) * be(1, 2));

  // Closed forms for the diagonal: a0 = 2*Pi(y0 - lambda_i y1), and the
  // mirrored product for a2.
  detail::internal_check(sf.a0 == two * prod_l, "a0 closed form");
  detail::internal_check(sf.a2 == two * prod_m, "a2 closed form");
  return sf;
}

// ---------------------------------------------------------------------------
// Verification procedures.  Check ids are the CLI selector tokens.
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
VerificationReport report_stub(const std::string& id,
                               const ConstructionContext<F>& ctx) {
  VerificationReport r;
  r.check = id;
  r.b = ctx.b;
  r.field = ctx.fspec.str();
  r.seed = ctx.seed;
  return r;
}

inline std::string degs_tally(const std::vector<Multidegree>& ds) {
  std::map<std::string, int> tally;
  for (const auto& d : ds) ++tally[deg_str(d)];
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : tally) {
    if (!first) s += ", ";
    first = false;
    s += k + " => " + std::to_string(v);
  }
  return s + "}";
}

inline std::string totals_str(const std::vector<long long>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

template <class F>
BettiTable quotient_betti(const Ideal<F>& I) {
  return betti_from_twists(resolution_of_quotient(I));
}

}  // namespace detail

// Check 3.1: intersecting the threefold with the cone over the twisted cubic
// splits into the exceptional surface and the strict transform of the cubic.
template <class F>
VerificationReport verify_components(const ConstructionContext<F>& ctx,
                                     const GalleryOptions& opts = {}) {
  auto r = detail::report_stub("3.1", ctx);
  const auto& R = ctx.p2p3;

  // Symbolic part (any mode): along the cubic the pencil matrix drops to
  // rank <= 1, which is what makes the surface component a pencil bundle.
  {
    auto bby = ctx.pencil_matrix(R);
    auto cubic = ctx.twisted_cubic(R);
    bool inside = true;
    for (const auto& g : minors(bby, 2)) inside = inside && cubic.contains(g);
    r.require("pencil_matrix_rank_one_on_cubic", inside);
  }

  if (ctx.mode == Mode::Generic && !opts.slow) {
    r.note("scope", "symbolic subset (generic mode; pass --slow for the "
                    "saturation pipeline)");
    return r;
  }

  const auto& IX = ctx.threefold_ideal();
  auto cubic = ctx.twisted_cubic(R);
  auto IE = ctx.exceptional_surface(R);
  auto IC1 = minors_ideal(ctx.cubic_transform_matrix(R), 2);

  auto S = ideal_saturate(ideal_sum(IX, cubic),
                          ctx.variables_ideal(R, ctx.xnames()));
  S = ideal_saturate(S, ctx.variables_ideal(R, ctx.ynames()));

  r.require("product_inside_saturation",
            ideal_subset(ideal_product(IE, IC1), S));
  r.require("saturation_inside_surface", ideal_subset(S, IE));
  r.require("saturation_inside_curve", ideal_subset(S, IC1));
  r.require("saturation_equals_intersection",
            ideal_equal(S, ideal_intersect(IE, IC1)));

  if (ctx.mode == Mode::Random) {
    auto hd_ix = hilbert_data(ctx.threefold_ideal());
    r.require_eq("threefold_codimension", 7 - hd_ix.affine_dim, 2);
    r.require_eq("surface_affine_dim", hilbert_data(IE).affine_dim, 4);
    r.require_eq("curve_affine_dim", hilbert_data(IC1).affine_dim, 3);

    auto img = ideal_map_by_name(ideal_eliminate(IC1, ctx.xnames()), ctx.p3);
    r.require("curve_projects_onto_cubic",
              ideal_equal(img, ctx.twisted_cubic(ctx.p3)));
    auto hd_c = hilbert_data(ctx.twisted_cubic(ctx.p3));
    r.require_eq("cubic_degree", hd_c.degree, 3);
    r.require_eq("cubic_genus", hd_c.genus.value_or(-99), 0);

    if (ctx.b == 1) {
      auto bE = detail::quotient_betti(IE);
      auto bC1 = detail::quotient_betti(IC1);
      r.note("surface_betti_totals", detail::totals_str(bE.totals()));
      r.note("curve_betti_totals", detail::totals_str(bC1.totals()));
      r.require("surface_betti_layout",
                bE == betti_of({{0, 0, 1},
                                {1, 2, 3},
                                {2, 3, 2},
                                {1, 3, 3},
                                {2, 4, 6},
                                {3, 5, 3}}));
      r.require("curve_betti_layout", bC1 == betti_of({{0, 0, 1},
                                                       {1, 2, 10},
                                                       {2, 3, 20},
                                                       {3, 4, 15},
                                                       {4, 5, 4}}));
    }
  }
  return r;
}

// Check 4.1: pushing the incidence threefold down to P^1 x P^3 gives a
// hypersurface of bidegree (2, b+1) with the displayed symmetric model, and
// the exceptional locus contracts onto the curve cut by the 2x4 minors.
template <class F>
VerificationReport verify_hypersurface_model(const ConstructionContext<F>& ctx,
                                             const GalleryOptions& opts = {}) {
  auto r = detail::report_stub("4.1", ctx);

  auto inc = ctx.incidence_generators();
  {
    std::vector<Multidegree> degs;
    for (const auto& g : inc) degs.push_back(g.required_degree());
    std::vector<Multidegree> want(3, Multidegree{1, 1, 1});
    want.push_back(Multidegree{1, (long long)ctx.b, 1});
    r.note("incidence_generator_tally", detail::degs_tally(degs));
    r.require("incidence_generator_degrees",
              detail::degs_tally(degs) == detail::degs_tally(want));
  }

  {
    auto T = ctx.p1p2p3;
    auto m = ctx.presentation(T);
    auto N = ctx.nmatrix(T);
    auto xv = [&](int i) {
      return Polynomial<F>::variable(T, "x" + std::to_string(i));
    };
    auto tz0 = Polynomial<F>::variable(T, "z0");
    auto tz1 = Polynomial<F>::variable(T, "z1");
    bool lin = true;
    for (int c = 0; c < 4; ++c)
      lin = lin && xv(0) * N.at(0, c) + xv(1) * N.at(1, c) +
                           xv(2) * N.at(2, c) ==
                       tz0 * m.at(0, c) + tz1 * m.at(1, c);
    r.require("linear_system_matrix_identity", lin);
  }

  {
    auto R = ctx.p1p3;
    auto z0 = Polynomial<F>::variable(R, "z0");
    auto z1 = Polynomial<F>::variable(R, "z1");
    auto M = ctx.symmetric_model(R);
    auto quad = M.at(0, 0) * z0 * z0 + M.at(0, 1) * z0 * z1 +
                M.at(1, 0) * z1 * z0 + M.at(1, 1) * z1 * z1;
    auto f = ctx.hypersurface(R);
    r.require("quadratic_form_matches_matrix", quad == f);
    auto H = hessian(f, {R->index_of("z0"), R->index_of("z1")});
    bool hess_ok = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        hess_ok = hess_ok &&
                  H.at(i, j) == Polynomial<F>::from_int(R, 2) * M.at(i, j);
    r.require("hessian_is_twice_matrix", hess_ok);
    auto d = f.homogeneous_degree();
    r.note("hypersurface_bidegree", d ? deg_str(*d) : "inhomogeneous");
    r.require("hypersurface_bidegree_expected",
              d && (*d)[0] == 2 && (*d)[1] == ctx.b + 1);
  }

  {
    // Symmetry of f under reversing both rulings (y_i -> y_{3-i}, z0 <-> z1,
    // b_ij -> b_{1-i,2-j}); checked with opaque coefficients.
    auto gctx = ctx.mode == Mode::Generic
                    ? ctx
                    : build_context<F>(ctx.b, ctx.fspec, Mode::Generic,
                                       ctx.seed);
    auto R = gctx.p1p3;
    std::vector<Polynomial<F>> im;
    for (const auto& v : R->vars) {
      std::string n = v;
      if (n == "z0") n = "z1";
      else if (n == "z1") n = "z0";
      else if (n[0] == 'y') n = "y" + std::to_string(3 - (n[1] - '0'));
      else if (n[0] == 'b')
        n = "b" + std::to_string(1 - (n[1] - '0')) +
            std::to_string(2 - (n[2] - '0'));
      im.push_back(Polynomial<F>::variable(R, n));
    }
    auto f = gctx.hypersurface(R);
    r.require("ruling_swap_symmetry", f.substitute(R, im) == f);
  }

  if (ctx.mode == Mode::Generic && !opts.slow) {
    r.note("scope", "symbolic subset (generic mode; pass --slow for the "
                    "elimination pipeline)");
    return r;
  }

  {
    auto I = ctx.incidence_ideal();
    auto sat = ideal_saturate(I, ctx.variables_ideal(ctx.p1p2p3, ctx.xnames()));
    auto elim = ideal_eliminate(sat, ctx.xnames());
    auto down = ideal_map_by_name(elim, ctx.p1p3);
    auto fI = Ideal<F>(ctx.p1p3, {ctx.hypersurface(ctx.p1p3)});
    r.require("image_is_principal_hypersurface", ideal_equal(down, fI));

    auto N = ctx.nmatrix(ctx.p1p3);
    auto mins = minors_ideal(N, 3);
    bool zs = radical_membership(mins, ctx.hypersurface(ctx.p1p3));
    for (const auto& g : mins.gens()) zs = zs && radical_membership(fI, g);
    r.require("rank_locus_zero_set_equality", zs);

    auto E = ideal_saturate(minors_ideal(N, 2),
                            ctx.variables_ideal(ctx.p1p3, ctx.znames()));
    E = ideal_saturate(E, ctx.variables_ideal(ctx.p1p3, ctx.ynames()));
    if (ctx.mode == Mode::Generic) {
      // With symbolic parameters the rank locus carries a primary component
      // along the vanishing of the pencil column; it lives over interior
      // points of both factors, so it must be saturated away explicitly.
      std::vector<Polynomial<F>> zb{ctx.zb(0, ctx.p1p3), ctx.zb(1, ctx.p1p3),
                                    ctx.zb(2, ctx.p1p3)};
      E = ideal_saturate(E, Ideal<F>(ctx.p1p3, zb));
      r.note("parameter_column_saturated", "yes");
    }
    auto EC = minors_ideal(ctx.exceptional_curve_matrix(ctx.p1p3), 2);
    r.require("exceptional_image_matrix_model", ideal_equal(E, EC));
    if (ctx.b == 1 && ctx.mode == Mode::Random) {
      auto bE = detail::quotient_betti(EC);
      r.note("exceptional_curve_betti_totals", detail::totals_str(bE.totals()));
      r.require("exceptional_curve_betti_layout",
                bE == betti_of({{0, 0, 1}, {1, 2, 6}, {2, 3, 8}, {3, 4, 3}}));
    }

    auto IC1 = minors_ideal(ctx.cubic_transform_matrix(ctx.p2p3), 2);
    auto conic = ideal_eliminate(IC1, ctx.ynames());
    auto x = [&](int i) {
      return Polynomial<F>::variable(ctx.p2p3, "x" + std::to_string(i));
    };
    r.require("curve_maps_to_conic",
              ideal_equal(conic,
                          Ideal<F>(ctx.p2p3, {x(0) * x(2) - x(1) * x(1)})));
  }
  return r;
}

// Check 4.2: the double cover branched over det(M) acquires exactly (b+1)^3
// nodes, at the common zeros of the entries of M.
template <class F>
VerificationReport verify_double_cover_nodes(const ConstructionContext<F>& ctx,
                                             const GalleryOptions& opts = {}) {
  (void)opts;
  auto r = detail::report_stub("4.2", ctx);
  if (ctx.mode == Mode::Generic) {
    r.skip("point counting needs a specialization; run in random mode");
    return r;
  }
  const auto& R = ctx.p3;
  auto A = Ideal<F>(R, {ctx.acoeff(0, R), ctx.acoeff(1, R), ctx.acoeff(2, R)});
  long long want = (ctx.b + 1LL) * (ctx.b + 1) * (ctx.b + 1);

  auto cert = zero_dim_certificate(A, Rng::mix(ctx.seed, 0xA2));
  if (!cert.finite || cert.length != want || !cert.reduced)
    throw Error(ErrKind::RetrySeed, "node scheme degenerated; retry seed");
  r.require("node_scheme_finite", cert.finite);
  r.require_eq("node_count", cert.length, want);
  r.require("node_scheme_reduced", cert.reduced);
  r.require_eq("node_support", cert.support_degree, want);

  auto det = ctx.branch_determinant(R);
  std::vector<Polynomial<F>> grads;
  for (int i = 0; i < 4; ++i) grads.push_back(det.derivative(i));
  auto Jac = Ideal<F>(R, grads);
  bool grad_in = true;
  for (const auto& g : grads) grad_in = grad_in && A.contains(g);
  r.require("gradient_inside_node_ideal", grad_in);
  bool conv = true;
  for (const auto& a : A.gens()) conv = conv && radical_membership(Jac, a);
  r.require("node_ideal_in_radical_gradient", conv);

  auto certJ = zero_dim_certificate(Jac, Rng::mix(ctx.seed, 0xB2));
  r.require("singular_scheme_finite", certJ.finite);
  r.require_eq("singular_scheme_length", certJ.length, want);
  r.require_eq("singular_scheme_support", certJ.support_degree, want);

  auto hb = hilbert_data(Ideal<F>(R, {det}));
  r.require_eq("branch_degree", hb.degree, 2 * ctx.b + 2);

  auto fA = ideal_map_by_name(A, ctx.p1p3);
  r.require("fibers_over_nodes_inside_hypersurface",
            fA.contains(ctx.hypersurface(ctx.p1p3)));
  return r;
}

// Check 4.3: the twisted cubic is everywhere tangent to the branch surface;
// inside the hypersurface model it splits off the residual curve cut by the
// principal Pfaffians of the displayed 5x5 alternating matrix.
template <class F>
VerificationReport verify_tangency_and_residual(
    const ConstructionContext<F>& ctx, const GalleryOptions& opts = {}) {
  auto r = detail::report_stub("4.3", ctx);
  const auto& R = ctx.p3;

  {
    auto lhs = ctx.branch_determinant(R) +
               ctx.tangency_cofactor(R) * ctx.tangency_cofactor(R);
    r.require("branch_is_minus_square_on_cubic",
              ctx.twisted_cubic(R).contains(lhs));
  }

  if (ctx.mode == Mode::Generic && !opts.slow) {
    r.note("scope", "symbolic congruence only (generic mode; pass --slow "
                    "for the residual pipeline)");
    return r;
  }

  // Point counts need specialized parameters; the residual decomposition
  // below is ideal-theoretic and runs symbolically as well.
  if (ctx.mode == Mode::Random) {
    auto T = ideal_sum(ctx.twisted_cubic(R),
                       Ideal<F>(R, {ctx.branch_determinant(R)}));
    auto cert = zero_dim_certificate(T, Rng::mix(ctx.seed, 0xC3));
    long long pts = 3LL * (ctx.b + 1);
    if (!cert.finite || cert.length != 2 * pts || cert.support_degree != pts)
      throw Error(ErrKind::RetrySeed, "contact scheme degenerated; retry seed");
    r.require("contact_scheme_finite", cert.finite);
    r.require_eq("contact_length", cert.length, 2 * pts);
    r.require_eq("contact_support", cert.support_degree, pts);
    r.require("contact_nowhere_reduced", cert.length == 2 * cert.support_degree);
  }

  const auto& R13 = ctx.p1p3;
  auto IC1 = minors_ideal(ctx.exceptional_curve_matrix(R13), 2);
  auto IC2 = ctx.residual_curve(R13);
  {
    auto pf = ctx.residual_pfaffian_matrix(R13);
    r.require("pfaffian_matrix_alternating", is_alternating(pf));
    auto pfs = principal_pfaffians(pf);
    auto conics = Ideal<F>(R13, {pfs[2], pfs[3], pfs[4]});
    r.require("pfaffian_conics_cut_cubic",
              ideal_equal(conics, ctx.twisted_cubic(R13)));

    auto S = ideal_sum(Ideal<F>(R13, {ctx.hypersurface(R13)}),
                       ctx.twisted_cubic(R13));
    S = ideal_saturate(S, ctx.variables_ideal(R13, ctx.znames()));
    S = ideal_saturate(S, ctx.variables_ideal(R13, ctx.ynames()));
    r.require("residual_product_bound",
              ideal_subset(ideal_product(IC1, IC2), S));
    r.require("residual_decomposition",
              ideal_equal(S, ideal_intersect(IC1, IC2)));
    r.require("residual_is_colon", ideal_equal(IC2, ideal_quotient(S, IC1)));
    if (ctx.b == 1) {
      auto bC2 = detail::quotient_betti(IC2);
      r.note("residual_betti_totals", detail::totals_str(bC2.totals()));
      r.require("residual_betti_layout", bC2 == betti_of({{0, 0, 1},
                                                          {1, 2, 3},
                                                          {1, 3, 2},
                                                          {2, 3, 2},
                                                          {2, 4, 3},
                                                          {3, 6, 1}}));
    }
  }

  if (ctx.mode == Mode::Random) {
    // Degree of the residual curve over the pencil: specialize (z0:z1) to a
    // seeded point and certify the fiber length 3b+2.
    F field = field_from_spec<F>(ctx.fspec);
    Rng rng(Rng::mix(ctx.seed, 0xF1B));
    auto c1 = field.random(rng);
    while (field.is_zero(c1)) c1 = field.random(rng);
    std::vector<Polynomial<F>> im;
    for (const auto& v : R13->vars) {
      if (v == "z0")
        im.push_back(Polynomial<F>::from_int(ctx.p3, 1));
      else if (v == "z1")
        im.push_back(Polynomial<F>::constant(ctx.p3, c1));
      else
        im.push_back(Polynomial<F>::variable(ctx.p3, v));
    }
    std::vector<Polynomial<F>> fg;
    for (const auto& g : IC2.gens()) fg.push_back(g.substitute(ctx.p3, im));
    auto cert = zero_dim_certificate(Ideal<F>(ctx.p3, fg),
                                     Rng::mix(ctx.seed, 0xF2B));
    r.require("fiber_finite", cert.finite);
    r.require_eq("pencil_fiber_degree", cert.length, 3 * ctx.b + 2);
  }
  return r;
}

// Check 4.4: the two factorizations of f over the charts a0 != 0 / a2 != 0,
// and the appendix pipeline computing the base locus of the second small
// resolution inside P^1 x P(1,1,1,1,b+1).
template <class F>
VerificationReport verify_small_resolutions(const ConstructionContext<F>& ctx,
                                            const GalleryOptions& opts = {}) {
  auto r = detail::report_stub("4.4", ctx);
  const auto& R = ctx.p1p3;
  auto z0 = Polynomial<F>::variable(R, "z0");
  auto z1 = Polynomial<F>::variable(R, "z1");
  auto two = Polynomial<F>::from_int(R, 2);
  auto a0 = ctx.acoeff(0, R), a1 = ctx.acoeff(1, R), a2 = ctx.acoeff(2, R);
  auto f = ctx.hypersurface(R);

  r.require("chart_factorization_first",
            Ideal<F>(R, {a0}).contains(f - z1 * (two * z0 * a1 + z1 * a2)));
  r.require("chart_factorization_second",
            Ideal<F>(R, {a2}).contains(f - z0 * (z0 * a0 + two * z1 * a1)));

  if (ctx.mode == Mode::Generic && !opts.slow) {
    r.note("scope", "symbolic factorizations only (generic mode; pass --slow "
                    "for the weighted pipeline)");
    return r;
  }

  const auto& W = ctx.rw;
  auto w = Polynomial<F>::variable(W, "w");
  auto A0 = ctx.acoeff(0, W), A1 = ctx.acoeff(1, W), A2 = ctx.acoeff(2, W);
  auto Z0 = Polynomial<F>::variable(W, "z0");
  auto Z1 = Polynomial<F>::variable(W, "z1");
  auto L = poly_matrix<F>(W, {{A0, A1 - w, Z1}, {A1 + w, A2, -Z0}});
  auto I = minors_ideal(L, 2);
  auto fW = Ideal<F>(W, {ctx.hypersurface(W)});

  r.require("pencil_model_eliminates_to_hypersurface",
            ideal_equal(ideal_eliminate(I, std::vector<std::string>{"w"}), fW));

  std::vector<std::string> allv = W->vars;
  auto irrel = ctx.variables_ideal(W, allv);
  auto strict_transform = [&](int col) {
    auto colI = Ideal<F>(W, {L.at(0, col), L.at(1, col)});
    auto I1 = ideal_saturate(ideal_sum(colI, I), irrel);
    return ideal_eliminate(I1, std::vector<std::string>{"w"});
  };
  auto I2 = strict_transform(0);
  auto I2p = strict_transform(1);
  auto base = ideal_saturate(ideal_sum(I2, I2p),
                             ctx.variables_ideal(W, ctx.znames()));
  r.require("flop_base_locus_is_node_ideal",
            ideal_equal(base, Ideal<F>(W, {A0, A1, A2})));

  auto q = w * w + ctx.branch_determinant(W);
  auto d = q.homogeneous_degree();
  r.require("cover_equation_weighted_degree",
            d && (*d)[0] == 0 && (*d)[1] == 2 * ctx.b + 2);
  return r;
}

// Check 4.5: nef/effective/movable cones, the flop involution on divisor
// classes, and the Kodaira dimension across the family.
template <class F>
VerificationReport verify_cones_involution(const ConstructionContext<F>& ctx,
                                           const GalleryOptions& opts = {}) {
  (void)opts;
  auto r = detail::report_stub("4.5", ctx);
  long long b = ctx.b;

  auto nef = nef_cone(b);
  auto eff = effective_cone(b);
  r.require("nef_generators",
            nef.r1 == Class2{1, 0} && nef.r2 == Class2{0, 1});
  r.require("effective_generators",
            eff.r1 == Class2{1, 0} && eff.r2 == Class2{-1, b + 1});
  r.require("movable_equals_effective", movable_cone(b) == effective_cone(b));
  r.require("antiflip_ray_not_nef", !nef.contains({-1, b + 1}));
  r.require("effective_contains_nef",
            eff.contains({1, 0}) && eff.contains({0, 1}));

  auto inv = involution_matrix(b);
  r.require("involution_squares_to_identity", inv.mul(inv).is_identity());
  r.require("involution_swaps_effective_rays",
            inv.apply({1, 0}) == Class2{-1, b + 1} &&
                inv.apply({-1, b + 1}) == Class2{1, 0});
  r.require("involution_fixes_pencil_ray", inv.apply({0, 1}) == Class2{0, 1});
  r.require("involution_preserves_cones", involution_respects_cones(b));

  auto K = canonical_class(b);
  r.require("canonical_class", K == Class2{0, b - 3});
  r.require("canonical_class_flop_invariant", inv.apply(K) == K);
  auto kappa = kodaira_dimension(b);
  long long got = kappa ? *kappa : -1000;  // -1000 encodes "minus infinity"
  long long want = b <= 2 ? -1000 : (b == 3 ? 0 : 3);
  r.require_eq("kodaira_dimension", got, want);
  r.note("kodaira_display", kappa ? std::to_string(*kappa) : "-infinity");

  {
    auto det = ctx.branch_determinant(ctx.p3);
    auto d = det.homogeneous_degree();
    r.require("branch_weighted_degree",
              d && deg_total(*d) == 2 * b + 2);
  }

  // chi is preserved by the flop only for |alpha| <= 1; in general it shifts
  // by a cubic whose coefficient is the number of flopped curves, so the
  // defect identity doubles as an independent count of the (b+1)^3 nodes.
  // h^0, by contrast, is genuinely flop-invariant; we confirm it wherever
  // the long exact sequence pins down both sides.
  bool sym = true, defect = true, serre = true, h0sym = true;
  for (long long al = -3; al <= 3; ++al)
    for (long long be = -7; be <= 7; ++be) {
      long long lhs = euler_char_hypersurface(b, al, be);
      long long rhs =
          euler_char_hypersurface(b, -al, al * (b + 1) + be);
      defect = defect && rhs - lhs == flop_chi_defect(b, al);
      if (al >= -1 && al <= 1) sym = sym && lhs == rhs;
      serre = serre &&
              lhs == -euler_char_hypersurface(b, -al, b - 3 - be);
      auto cL = divisor_cohomology_p1p3(b, al, be);
      auto cR = divisor_cohomology_p1p3(b, -al, al * (b + 1) + be);
      if (cL.known[0] && cR.known[0]) h0sym = h0sym && cL.h[0] == cR.h[0];
    }
  r.require("flop_chi_symmetry_small_twists", sym);
  r.require("flop_chi_defect_counts_nodes", defect);
  r.require("serre_duality_for_chi", serre);
  r.require("flop_h0_invariance_determined_cells", h0sym);
  return r;
}

// Check chern: integer cohomology spot values — truncated Chern series of
// the tangent quotients, Euler characteristics on the threefold, and the
// determined entries of the hypersurface-model cohomology table.
template <class F>
VerificationReport verify_chern_euler(const ConstructionContext<F>& ctx,
                                      const GalleryOptions& opts = {}) {
  (void)opts;
  auto r = detail::report_stub("chern", ctx);
  long long b = ctx.b;

  r.require("tangent_quotient_series", chern_quotient_rank2_p3());
  r.require("tangent_quotient_series_control", chern_quotient_rank2_p2());

  auto h = divisor_cohomology_p1p3(b, -1, b + 1);
  r.require("antiflip_sections_known", h.known[0]);
  r.require_eq("antiflip_sections", h.h[0], 2);

  r.note("chi_center", std::to_string(euler_char_threefold(b, 0, 0)));
  if (b == 3) {
    r.require_eq("chi_trivial_bundle", euler_char_threefold(3, 0, 0), 0);
    r.require_eq("chi_cell_0_4", euler_char_threefold(3, 0, 4), 36);
    auto h01 = divisor_cohomology_p1p3(3, 0, 1);
    r.require("sections_0_1_known", h01.known[0]);
    r.require_eq("sections_0_1", h01.h[0], 4);
  }

  bool cons = true;
  for (long long al = -3; al <= 3; ++al)
    for (long long be = -7; be <= 7; ++be) {
      auto v = divisor_cohomology_p1p3(b, al, be);
      bool all = v.known[0] && v.known[1] && v.known[2] && v.known[3];
      if (all)
        cons = cons && (v.h[0] - v.h[1] + v.h[2] - v.h[3] == v.chi);
    }
  r.require("les_chi_consistency", cons);

  bool twopath = true;
  for (long long be = 0; be <= b + 2; ++be) {
    auto v = divisor_cohomology_p1p3(b, 0, be);
    twopath = twopath && v.known[0] &&
              v.h[0] == h0_vertical_via_pushforward(b, be);
  }
  r.require("vertical_sections_two_path", twopath);
  return r;
}

inline const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = {"3.1", "4.1", "4.2", "4.3",
                                               "4.4", "4.5", "chern"};
  return ids;
}

template <class F>
VerificationReport run_check(const std::string& id,
                             const ConstructionContext<F>& ctx,
                             const GalleryOptions& opts = {}) {
  if (id == "3.1") return verify_components(ctx, opts);
  if (id == "4.1") return verify_hypersurface_model(ctx, opts);
  if (id == "4.2") return verify_double_cover_nodes(ctx, opts);
  if (id == "4.3") return verify_tangency_and_residual(ctx, opts);
  if (id == "4.4") return verify_small_resolutions(ctx, opts);
  if (id == "4.5") return verify_cones_involution(ctx, opts);
  if (id == "chern") return verify_chern_euler(ctx, opts);
  throw Error(ErrKind::ParseError, "unknown check id '" + id + "'");
}

}  // namespace detvar
