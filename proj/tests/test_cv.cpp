#include <gtest/gtest.h>

#include <random>

#include <ldikit/cv.hpp>
#include <ldikit/ldi.hpp>
#include <ldikit/linalg.hpp>
#include <ldikit/pauli.hpp>

#include "support.hpp"

using namespace ldikit;
using testsupport::mk;

TEST(Render, FrozenSpellings) {
  EXPECT_EQ(render_additive(phi_encode("X I I")), "x1");
  EXPECT_EQ(render_additive(phi_encode("I I Z I I Z^-2 Z")), "p3-2p6+p7");
  EXPECT_EQ(render_additive(phi_encode("XZ^2 X^-1")), "x1-x2+2p1");
  EXPECT_EQ(render_additive(phi_encode("X^-1 I")), "-x1");
  EXPECT_EQ(render_additive(phi_encode("I I")), "0");
  EXPECT_EQ(render_additive(phi_encode("X X")), "x1+x2");
  EXPECT_EQ(render_additive(phi_encode("X^3Z^-4 I")), "3x1-4p1");
}

TEST(Render, NullifierCarriesCoefficients) {
  Nullifier f = nullifier_of(phi_encode("XZ^2 X^-1"));
  ASSERT_EQ(f.x_coeffs.size(), 2u);
  EXPECT_EQ(f.x_coeffs[0], 1);
  EXPECT_EQ(f.x_coeffs[1], -1);
  EXPECT_EQ(f.p_coeffs[0], 2);
  EXPECT_EQ(f.p_coeffs[1], 0);
  EXPECT_EQ(f.rendered, "x1-x2+2p1");
}

TEST(Nullifiers, SteaneSixStrings) {
  std::vector<Nullifier> fs = to_nullifiers(testsupport::steane());
  ASSERT_EQ(fs.size(), 6u);
  EXPECT_EQ(fs[0].rendered, "x1+x2+x3+x4");
  EXPECT_EQ(fs[1].rendered, "x2+x3+x5+x6");
  EXPECT_EQ(fs[2].rendered, "x3+x4+x6+x7");
  EXPECT_EQ(fs[3].rendered, "p1-p2+p3-p4");
  EXPECT_EQ(fs[4].rendered, "p2-p3-p5+p6");
  EXPECT_EQ(fs[5].rendered, "p3-p4-p6+p7");
}

TEST(Nullifiers, RequireInvariantMatrix) {
  EXPECT_THROW(to_nullifiers(testsupport::steane_mod2()),
               std::invalid_argument);
}

TEST(Commutator, HandValue) {
  PauliVector u(2), v(2);
  u.entries = {1, 2, 3, 4};
  v.entries = {5, 6, 7, 8};
  // (1,2).(7,8) - (5,6).(3,4) = 23 - 39
  EXPECT_EQ(additive_commutator(u, v), -16);
  EXPECT_EQ(additive_commutator(u, v), symplectic_product(u, v));
}

TEST(Commutator, AgreesWithSymplecticProduct) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> ent(-50, 50);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    PauliVector u(n), v(n);
    for (int i = 0; i < 2 * n; ++i) {
      u.entries[i] = ent(rng);
      v.entries[i] = ent(rng);
    }
    ASSERT_EQ(additive_commutator(u, v), symplectic_product(u, v));
  }
}

TEST(LogicalQuadratures, SteaneExactCommutation) {
  GeneratorMatrix s = testsupport::steane();
  std::vector<Nullifier> logs = logical_quadratures(s, 2);
  ASSERT_EQ(logs.size(), 2u);
  std::vector<PauliVector> reps = integer_logicals(s, 2);
  ASSERT_EQ(reps.size(), 2u);
  // integer-exact commutation with every generator, not just mod 2
  for (const auto& rep : reps)
    EXPECT_TRUE(syndrome_of(s, rep).all_zero());
  // conjugate pair: commutator nonzero
  EXPECT_NE(additive_commutator(reps[0], reps[1]), 0);
  // renders match the integer representatives
  EXPECT_EQ(logs[0].rendered, render_additive(reps[0]));
  EXPECT_EQ(logs[1].rendered, render_additive(reps[1]));
  // mod 2 they span the textbook all-X / all-Z quotient
  GeneratorMatrix ours = s, textbook = s;
  ours.append_row(reps[0]);
  ours.append_row(reps[1]);
  textbook.append_row(phi_encode("X X X X X X X"));
  textbook.append_row(phi_encode("Z Z Z Z Z Z Z"));
  EXPECT_TRUE(same_row_span_mod(ours, textbook, 2));
}

TEST(LogicalQuadratures, EmptyForFullRank) {
  GeneratorMatrix m =
      mk(2, LocalDimension::prime(2), {{1, -1, 0, 0}, {0, 0, 1, 1}});
  EXPECT_TRUE(integer_logicals(m, 2).empty());
  EXPECT_TRUE(logical_quadratures(m, 5).empty());
}

TEST(LogicalQuadratures, RandomLdiCodes) {
  std::mt19937_64 rng(42);
  for (long q : {2L, 3L}) {
    for (int t = 0; t < 10; ++t) {
      int n = 1 + static_cast<int>(rng() % 4);
      GeneratorMatrix m = testsupport::random_commuting_code(rng, n, q);
      GeneratorMatrix ldi = make_ldi(m, q, LdiVariant::LowerTriangular);
      std::vector<PauliVector> reps = integer_logicals(ldi, q);
      const int k = n - ldi.row_count();
      ASSERT_EQ(static_cast<int>(reps.size()), 2 * k);
      for (const auto& rep : reps)
        EXPECT_TRUE(syndrome_of(ldi, rep).all_zero());
      for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(reps.size()); ++j) {
          Int prod = symplectic_product(reps[i], reps[j]) % q;
          if (j == i + 1 && i % 2 == 0)
            EXPECT_NE(prod, 0);
          else
            EXPECT_EQ(prod, 0);
        }
      }
    }
  }
}

TEST(LogicalQuadratures, RequireInvariantMatrix) {
  EXPECT_THROW(logical_quadratures(testsupport::steane_mod2(), 2),
               std::invalid_argument);
}
