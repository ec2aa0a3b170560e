// Line-bundle cohomology on projective spaces and products, the long-exact-
// sequence bookkeeping on the (2, b+1) hypersurface model, the Euler
// characteristics on both birational models, the flop defect identity, and
// the rank-two cone/involution/Kodaira layer.

#include <gtest/gtest.h>

#include "detvar/cohomology.hpp"
#include "detvar/cones.hpp"

namespace detvar {
namespace {

TEST(Bott, PinnedLineValues) {
  EXPECT_EQ(bott_line(3, 2).h, (std::vector<long long>{10, 0, 0, 0}));
  EXPECT_EQ(bott_line(3, -5).h, (std::vector<long long>{0, 0, 0, 4}));
  EXPECT_EQ(bott_line(3, -4).h, (std::vector<long long>{0, 0, 0, 1}));
  EXPECT_EQ(bott_line(1, -2).h, (std::vector<long long>{0, 1}));
  EXPECT_EQ(bott_line(2, 0).h, (std::vector<long long>{1, 0, 0}));
  // the strip -n <= d <= -1 has no cohomology at all
  for (long long d = -3; d <= -1; ++d)
    for (auto v : bott_line(3, d).h) EXPECT_EQ(v, 0);
}

TEST(Bott, SerreDualitySweep) {
  for (long long n = 1; n <= 3; ++n)
    for (long long d = -12; d <= 12; ++d) {
      auto a = bott_line(n, d);
      auto b = bott_line(n, -d - n - 1);
      for (long long i = 0; i <= n; ++i)
        EXPECT_EQ(a.h[(size_t)i], b.h[(size_t)(n - i)])
            << "n=" << n << " d=" << d << " i=" << i;
    }
}

TEST(Bott, ChiIsPolynomialBinomial) {
  for (long long n = 1; n <= 3; ++n)
    for (long long d = -12; d <= 12; ++d)
      EXPECT_EQ(bott_line(n, d).chi, binom(n + d, n));
}

TEST(Kunneth, ProductFourfoldValues) {
  auto v = line_bundle_p1p3(-2, -4);
  EXPECT_EQ(v.h, (std::vector<long long>{0, 0, 0, 0, 1}));
  auto w = line_bundle_p1p3(1, 2);
  EXPECT_EQ(w.h[0], 20);
  for (long long a = -6; a <= 6; ++a)
    for (long long c = -6; c <= 6; ++c) {
      auto k = line_bundle_p1p3(a, c);
      EXPECT_EQ(k.chi, bott_line(1, a).chi * bott_line(3, c).chi);
      EXPECT_EQ(k.chi, chi_p1p3(a, c));
    }
}

TEST(HypersurfaceModel, ChiConservationAcrossTheLES) {
  for (long long b = 1; b <= 4; ++b)
    for (long long alpha = -4; alpha <= 4; ++alpha)
      for (long long beta = -5; beta <= 5; ++beta) {
        auto d = divisor_cohomology_p1p3(b, alpha, beta);
        EXPECT_EQ(d.chi, chi_p1p3(alpha, beta) -
                             chi_p1p3(alpha - 2, beta - b - 1))
            << "b=" << b << " (" << alpha << "," << beta << ")";
        EXPECT_EQ(d.chi, euler_char_hypersurface(b, alpha, beta));
        // whenever every entry is determined, the alternating sum must agree
        if (d.all_known()) {
          long long s = d.h[0] - d.h[1] + d.h[2] - d.h[3];
          EXPECT_EQ(s, d.chi);
        }
      }
}

TEST(HypersurfaceModel, StructureSheafHasArithmeticGenusZeroShape) {
  // b = 3 structure sheaf: h^0 = h^3 = 1, middle cohomology vanishes.
  auto d = divisor_cohomology_p1p3(3, 0, 0);
  ASSERT_TRUE(d.all_known());
  EXPECT_EQ(d.h, (std::vector<long long>{1, 0, 0, 1}));
  EXPECT_EQ(d.chi, 0);
}

TEST(HypersurfaceModel, PinnedSectionCounts) {
  // O(0,1) at b = 3: the four pulled-back coordinates and nothing else.
  auto v = divisor_cohomology_p1p3(3, 0, 1);
  ASSERT_TRUE(v.known[0]);
  EXPECT_EQ(v.h[0], 4);
  // O(-1,4) at b = 3: a two-dimensional section space from the ideal layer.
  auto w = divisor_cohomology_p1p3(3, -1, 4);
  ASSERT_TRUE(w.known[0]);
  EXPECT_EQ(w.h[0], 2);
}

TEST(ThreefoldChi, PinnedTableValues) {
  EXPECT_EQ(euler_char_threefold(3, 0, 0), 0);
  EXPECT_EQ(euler_char_threefold(3, 0, 4), 36);
  EXPECT_EQ(euler_char_threefold(3, -3, 1), -8);
  EXPECT_EQ(euler_char_threefold(3, 2, -1), -8);
  // chi(O) = 1 + chi(O_P3(-b-1)) for the double cover: 1, 1, 0, -3, ...
  EXPECT_EQ(euler_char_threefold(1, 0, 0), 1);
  EXPECT_EQ(euler_char_threefold(2, 0, 0), 1);
  EXPECT_EQ(euler_char_threefold(4, 0, 0), -3);
  for (long long b = 1; b <= 4; ++b)
    EXPECT_EQ(euler_char_threefold(b, 0, 0), 1 + binom(-b - 1 + 3, 3));
}

TEST(ThreefoldChi, AgreesWithHypersurfaceModelOnPullbacks) {
  // the blow-down map identifies the two models along alpha = 0
  for (long long b = 1; b <= 4; ++b)
    for (long long beta = -7; beta <= 7; ++beta)
      EXPECT_EQ(euler_char_threefold(b, 0, beta),
                euler_char_hypersurface(b, 0, beta))
          << "b=" << b << " beta=" << beta;
}

TEST(VerticalSections, PushforwardSplitting) {
  EXPECT_EQ(h0_vertical_via_pushforward(3, 1), 4);
  EXPECT_EQ(h0_vertical_via_pushforward(3, 4), 36);
  EXPECT_EQ(h0_vertical_via_pushforward(1, 0), 1);
  EXPECT_EQ(h0_vertical_via_pushforward(1, -1), 0);
  // below beta = b+1 only the structure summand contributes
  for (long long b = 1; b <= 4; ++b)
    for (long long beta = 0; beta <= b; ++beta)
      EXPECT_EQ(h0_vertical_via_pushforward(b, beta), binom(beta + 3, 3));
  // two-path against the determined LES entries
  for (long long b = 1; b <= 4; ++b)
    for (long long beta = 0; beta <= 7; ++beta) {
      auto d = divisor_cohomology_p1p3(b, 0, beta);
      if (d.known[0])
        EXPECT_EQ(d.h[0], h0_vertical_via_pushforward(b, beta));
    }
}

TEST(Flop, ChiIsPreservedOnlyForSmallTwists) {
  for (long long b = 1; b <= 4; ++b)
    for (long long alpha = -3; alpha <= 3; ++alpha)
      for (long long beta = -7; beta <= 7; ++beta) {
        long long lhs = euler_char_hypersurface(b, alpha, beta);
        long long rhs =
            euler_char_hypersurface(b, -alpha, alpha * (b + 1) + beta);
        // exact defect, valid everywhere
        EXPECT_EQ(rhs - lhs, flop_chi_defect(b, alpha))
            << "b=" << b << " (" << alpha << "," << beta << ")";
        // strict symmetry on the strip through the flopping curves
        if (alpha >= -1 && alpha <= 1) EXPECT_EQ(rhs, lhs);
      }
}

TEST(Flop, DefectRecountsTheNodes) {
  // the alpha = 2 defect is minus the number of flopped curves, (b+1)^3
  for (long long b = 1; b <= 6; ++b) {
    EXPECT_EQ(flop_chi_defect(b, 2), -(b + 1) * (b + 1) * (b + 1));
    EXPECT_EQ(flop_chi_defect(b, -2), (b + 1) * (b + 1) * (b + 1));
    EXPECT_EQ(flop_chi_defect(b, 0), 0);
    EXPECT_EQ(flop_chi_defect(b, 1), 0);
    EXPECT_EQ(flop_chi_defect(b, -1), 0);
  }
  // hand values on the quadric model: chi(2,0) = 3 flops to chi(-2,4) = -5
  EXPECT_EQ(euler_char_hypersurface(1, 2, 0), 3);
  EXPECT_EQ(euler_char_hypersurface(1, -2, 4), -5);
  EXPECT_EQ(flop_chi_defect(1, 2), -8);
}

TEST(Flop, SectionsMatchOnDeterminedCells) {
  for (long long b = 1; b <= 4; ++b)
    for (long long alpha = -3; alpha <= 3; ++alpha)
      for (long long beta = -7; beta <= 7; ++beta) {
        auto d1 = divisor_cohomology_p1p3(b, alpha, beta);
        auto d2 =
            divisor_cohomology_p1p3(b, -alpha, alpha * (b + 1) + beta);
        if (d1.known[0] && d2.known[0])
          EXPECT_EQ(d1.h[0], d2.h[0])
              << "b=" << b << " (" << alpha << "," << beta << ")";
      }
}

TEST(SerreDuality, HoldsForChiOnTheHypersurfaceModel) {
  for (long long b = 1; b <= 4; ++b) {
    auto K = canonical_class(b);
    EXPECT_EQ(K.first, 0);
    for (long long alpha = -3; alpha <= 3; ++alpha)
      for (long long beta = -7; beta <= 7; ++beta)
        EXPECT_EQ(euler_char_hypersurface(b, alpha, beta),
                  -euler_char_hypersurface(b, K.first - alpha,
                                           K.second - beta))
            << "b=" << b << " (" << alpha << "," << beta << ")";
  }
}

TEST(ChernSeries, TangentQuotientIdentities) {
  EXPECT_TRUE(chern_quotient_rank2_p3());
  EXPECT_TRUE(chern_quotient_rank2_p2());
  auto s = binomial_series(4, 5);
  ASSERT_EQ(s.size(), 5u);
  for (size_t k = 0; k < s.size(); ++k) EXPECT_EQ(s[k], binom(4, (long long)k));
  auto q = series_quotient({1}, {1, -1}, 3);  // 1/(1-t) = 1 + t + t^2 + ...
  EXPECT_EQ(q, (std::vector<long long>{1, 1, 1}));
  EXPECT_THROW(series_quotient({1}, {2, 1}, 3), Error);
}

TEST(Cones, GeneratorsAndMembership) {
  for (long long b = 1; b <= 5; ++b) {
    auto nef = nef_cone(b);
    EXPECT_EQ(nef.r1, (Class2{1, 0}));
    EXPECT_EQ(nef.r2, (Class2{0, 1}));
    auto eff = effective_cone(b);
    EXPECT_EQ(eff.r1, (Class2{1, 0}));
    EXPECT_EQ(eff.r2, (Class2{-1, b + 1}));
    EXPECT_EQ(movable_cone(b), eff);
    // nef sits inside effective; the antiflipped ray does not return to nef
    EXPECT_TRUE(eff.contains(nef.r1) && eff.contains(nef.r2));
    EXPECT_TRUE(eff.contains({-1, b + 1}));
    EXPECT_FALSE(nef.contains({-1, b + 1}));
    EXPECT_FALSE(eff.contains({0, -1}));
    EXPECT_TRUE(eff.interior({1, 1}));
    EXPECT_TRUE(eff.on_boundary_ray({3, 0}));
  }
  EXPECT_THROW(RationalCone2::span({1, 1}, {2, 2}), Error);
  EXPECT_EQ(primitive_ray({-4, 6}), (Class2{-2, 3}));
  EXPECT_EQ(cross({1, 0}, {0, 1}), 1);
}

TEST(Cones, InvolutionActsAsExpected) {
  for (long long b = 1; b <= 6; ++b) {
    auto m = involution_matrix(b);
    EXPECT_TRUE(m.mul(m).is_identity());
    EXPECT_TRUE(involution_respects_cones(b));
    // fixes the fiber class of the pencil and the canonical class
    EXPECT_EQ(m.apply({0, 1}), (Class2{0, 1}));
    EXPECT_EQ(m.apply(canonical_class(b)), canonical_class(b));
    // swaps the extreme rays
    EXPECT_EQ(primitive_ray(m.apply({1, 0})), (Class2{-1, b + 1}));
  }
}

TEST(Cones, KodairaDimensionLadder) {
  EXPECT_EQ(kodaira_dimension(1), std::nullopt);
  EXPECT_EQ(kodaira_dimension(2), std::nullopt);
  EXPECT_EQ(kodaira_dimension(3), std::optional<long long>(0));
  EXPECT_EQ(kodaira_dimension(4), std::optional<long long>(3));
  EXPECT_EQ(kodaira_dimension(7), std::optional<long long>(3));
}

TEST(Cones, CanonicalClassByAdjunction) {
  for (long long b = 1; b <= 6; ++b)
    EXPECT_EQ(canonical_class(b), (Class2{0, b - 3}));
}

}  // namespace
}  // namespace detvar
