#include <gtest/gtest.h>

#include <ldikit/bounds.hpp>
#include <ldikit/pauli.hpp>

#include "support.hpp"

using namespace ldikit;
using testsupport::mk;

TEST(Cutoffs, Hadamard) {
  EXPECT_EQ(pstar_hadamard(1, 3), 16);   // 1^4 * 4^2
  EXPECT_EQ(pstar_hadamard(1, 2), 2);    // 1^2 * 2^1
  EXPECT_EQ(pstar_hadamard(3, 3), 1296); // 3^4 * 4^2
  EXPECT_EQ(pstar_hadamard(2, 4), 13824); // 2^6 * 6^3
}

TEST(Cutoffs, Css) {
  EXPECT_EQ(pstar_css(1, 3), 2);  // 1^2 * 2^1
  EXPECT_EQ(pstar_css(1, 2), 1);  // 1 * 1
  EXPECT_EQ(pstar_css(2, 3), 8);  // 4 * 2
  // half-integer exponents round up: 3^(3/2) = 5.19.. -> 6
  EXPECT_EQ(pstar_css(1, 4), 6);
  EXPECT_EQ(pstar_css(3, 4), 27 * 6);
  EXPECT_EQ(pstar_css(1, 5), 16);  // 4^2 exact
}

TEST(Cutoffs, Alternative) {
  // (B(q-1)(d-1)(1 + (d-1)^2 (q-1)^{d-1} (d-2)^{(d-2)/2}))^{d-1}
  EXPECT_EQ(pstar_alternative(1, 2, 2), 2);        // (1*(1+1))^1, 0^0 = 1
  EXPECT_EQ(pstar_alternative(1, 2, 3), 100);      // (2*(1+4))^2
  EXPECT_EQ(pstar_alternative(2, 3, 3), 18496);    // (8*(1+16))^2
  EXPECT_EQ(pstar_alternative(1, 3, 4), Int("658503000"));   // 870^3
  // odd d-2 rounds (d-2)^{(d-2)/2} up: 3^(3/2) -> 6
  EXPECT_EQ(pstar_alternative(1, 2, 5), Int("22663495936")); // 388^4
}

TEST(Cutoffs, Preconditions) {
  EXPECT_THROW(pstar_hadamard(0, 3), std::invalid_argument);
  EXPECT_THROW(pstar_hadamard(1, 1), std::invalid_argument);
  EXPECT_THROW(pstar_css(1, 0), std::invalid_argument);
  EXPECT_THROW(pstar_alternative(1, 1, 3), std::invalid_argument);
  EXPECT_THROW(pstar_alternative(0, 2, 3), std::invalid_argument);
}

TEST(Cutoffs, CssNeverAboveHadamard) {
  for (long b = 1; b <= 4; ++b)
    for (int d = 2; d <= 6; ++d)
      EXPECT_LE(pstar_css(b, d), pstar_hadamard(b, d)) << b << "," << d;
}

TEST(Report, SteaneFamilyCutoff) {
  BoundReport r = report_for(testsupport::steane(), 2, 3);
  EXPECT_EQ(r.B, 1);
  EXPECT_EQ(r.q, 2);
  EXPECT_EQ(r.d, 3);
  EXPECT_TRUE(r.css);
  ASSERT_TRUE(r.p_star_css.has_value());
  EXPECT_EQ(*r.p_star_css, 2);
  EXPECT_EQ(r.p_star_hadamard, 16);
  EXPECT_EQ(r.best, 2);
  EXPECT_TRUE(r.rotor_ok);
}

TEST(Report, TwoRegisterPair) {
  GeneratorMatrix m =
      mk(2, LocalDimension::prime(2), {{1, -1, 0, 0}, {0, 0, 1, 1}});
  BoundReport r = report_for(m, 2, 2);
  EXPECT_EQ(r.B, 1);
  EXPECT_EQ(r.p_star_hadamard, 2);
  EXPECT_TRUE(r.css);
  EXPECT_TRUE(r.rotor_ok);
}

TEST(Report, RotorBoundaryIsExact) {
  // css cutoff for B=1, d=4 is exactly 6: still below 2*pi
  BoundReport ok = report_for(testsupport::steane(), 2, 4);
  EXPECT_EQ(*ok.p_star_css, 6);
  EXPECT_EQ(ok.best, 6);
  EXPECT_TRUE(ok.rotor_ok);
  // at d=5 the css cutoff is 16: past it
  BoundReport no = report_for(testsupport::steane(), 2, 5);
  EXPECT_EQ(no.best, 16);
  EXPECT_FALSE(no.rotor_ok);
}

TEST(Report, NonCssSkipsCssBound) {
  GeneratorMatrix m = mk(1, LocalDimension::prime(2), {{1, 2}});
  BoundReport r = report_for(m, 2, 2);
  EXPECT_FALSE(r.css);
  EXPECT_FALSE(r.p_star_css.has_value());
  EXPECT_EQ(r.B, 2);
}

TEST(Report, RequiresInvariantMatrix) {
  GeneratorMatrix bad =
      mk(2, LocalDimension::prime(2), {{1, 1, 0, 0}, {0, 0, 1, 1}});
  EXPECT_THROW(report_for(bad, 2, 2), std::invalid_argument);
}
