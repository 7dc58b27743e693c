#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "peierls/errors.hpp"
#include "peierls/flux.hpp"
#include "peierls/phase.hpp"
#include "seed.hpp"

using namespace peierls;

namespace {

Site2 random_site(std::mt19937_64& rng, int r = 20) {
  std::uniform_int_distribution<std::int64_t> d(-r, r);
  return {d(rng), d(rng)};
}

ExactPhase random_phase(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-30, 30);
  return {d(rng), d(rng), d(rng)};
}

const Flux golden = Flux::golden();

}  // namespace

TEST(ExactPhase, GroupLaw) {
  std::mt19937_64 rng(peierls::testing::seed());
  for (int i = 0; i < 200; ++i) {
    const auto x = random_phase(rng), y = random_phase(rng), z = random_phase(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x + ExactPhase::identity(), x);
    EXPECT_TRUE((x + (-x)).is_identity());
  }
}

TEST(ExactPhase, PiIsNormalizedModTwo) {
  EXPECT_EQ(ExactPhase::pi(2), ExactPhase::identity());
  EXPECT_EQ(ExactPhase::pi(-1), ExactPhase::pi(1));
  EXPECT_FALSE(ExactPhase::pi(1).is_identity());
}

TEST(ExactPhase, IdentityAtIrrationalFluxNeedsZeroCoefficients) {
  EXPECT_TRUE(is_identity({0, 2, 0}, golden));
  EXPECT_FALSE(is_identity({2, 0, 0}, golden));
  EXPECT_FALSE(is_identity({0, 0, 2}, golden));
  EXPECT_FALSE(is_identity({0, 1, 0}, golden));
}

TEST(ExactPhase, RationalReductionIsCanonical) {
  const Flux f = Flux::rational(1, 3);
  // a counts theta/2 = pi/3: a = 6 is a full turn, a = 3 is exp(i pi).
  EXPECT_TRUE(is_identity(ExactPhase::theta_halves(6), f));
  EXPECT_TRUE(is_identity(ExactPhase::theta_halves(3) + ExactPhase::pi(1), f));
  EXPECT_FALSE(is_identity(ExactPhase::theta_halves(3), f));
  std::mt19937_64 rng(peierls::testing::seed() + 1);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_phase(rng), y = random_phase(rng);
    const bool numeric =
        std::abs(evaluate(x, f, 0.37) - evaluate(y, f, 0.37)) < 1e-9 && x.c() == y.c();
    EXPECT_EQ(same_phase(x, y, f), numeric) << x.to_string() << " vs " << y.to_string();
    EXPECT_EQ(reduce(reduce(x, f), f), reduce(x, f));
  }
}

TEST(ExactPhase, NumericEvaluation) {
  std::mt19937_64 rng(peierls::testing::seed() + 2);
  const double theta = golden.theta(), phi = 1.234;
  for (int i = 0; i < 100; ++i) {
    const auto x = random_phase(rng);
    const std::complex<double> expected =
        std::polar(1.0, x.a() * theta / 2 + x.b() * std::numbers::pi + x.c() * phi / 2);
    EXPECT_LT(std::abs(x.evaluate(theta, phi) - expected), 1e-12);
  }
}

TEST(ExactPhase, Rendering) {
  EXPECT_EQ(ExactPhase::identity().to_string(), "1");
  EXPECT_EQ(ExactPhase::theta_halves(1).to_string(), "e^{iθ/2}");
  EXPECT_EQ((ExactPhase::theta(-1) + ExactPhase::pi(1)).to_string(), "e^{-iθ+iπ}");
  EXPECT_EQ(ExactPhase::theta_halves(3).to_string(), "e^{3iθ/2}");
}

TEST(Bicharacter, Examples) {
  EXPECT_EQ(bicharacter(golden, {1, 0}, {0, 1}), ExactPhase::theta(1));
  EXPECT_TRUE(bicharacter(golden, {2, 3}, {2, 3}).is_identity());
  EXPECT_EQ(bicharacter(golden, {1, 1}, {2, 0}), ExactPhase::theta(-2));
}

TEST(Bicharacter, BimultiplicativeAndAlternating) {
  std::mt19937_64 rng(peierls::testing::seed() + 3);
  for (int i = 0; i < 100; ++i) {
    const Site2 m = random_site(rng), m2 = random_site(rng), n = random_site(rng);
    const Site2 sum{m[0] + m2[0], m[1] + m2[1]};
    EXPECT_EQ(bicharacter(golden, sum, n), bicharacter(golden, m, n) + bicharacter(golden, m2, n));
    EXPECT_TRUE(bicharacter(golden, m, m).is_identity());
  }
}

TEST(Cocycle, Examples) {
  EXPECT_EQ(cocycle(golden, {1, 0}, {0, 1}), ExactPhase::theta_halves(1));
  EXPECT_TRUE(cocycle(golden, {5, -2}, {5, -2}).is_identity());
}

TEST(Cocycle, IdentitiesOnRandomTriples) {
  std::mt19937_64 rng(peierls::testing::seed() + 4);
  for (const Flux& f : {golden, Flux::rational(2, 7)}) {
    for (int i = 0; i < 100; ++i) {
      const Site2 m = random_site(rng), n = random_site(rng), k = random_site(rng);
      const Site2 mn{m[0] + n[0], m[1] + n[1]}, nk{n[0] + k[0], n[1] + k[1]};
      EXPECT_TRUE(same_phase(cocycle(f, m, n) + cocycle(f, mn, k), cocycle(f, m, nk) + cocycle(f, n, k), f));
      EXPECT_TRUE(is_identity(cocycle(f, m, n) + cocycle(f, n, m), f));
      EXPECT_TRUE(same_phase(cocycle(f, m, n) - cocycle(f, n, m), bicharacter(f, m, n), f));
      EXPECT_TRUE(same_phase(cocycle(f, m, n) * 2, bicharacter(f, m, n), f));
    }
  }
}

TEST(Mu, Examples) {
  EXPECT_EQ(mu(golden, {1, 0}), (DualCharacter{ExactPhase::identity(), ExactPhase::theta(1)}));
  EXPECT_EQ(mu(golden, {0, 0}), (DualCharacter{}));
  const Flux f = Flux::rational(2, 5);
  const DualCharacter k = mu(f, {5, 0});
  EXPECT_TRUE(is_identity(k.on_e1, f));
  EXPECT_TRUE(is_identity(k.on_e2, f));
}

TEST(Mu, MatchesBicharacter) {
  std::mt19937_64 rng(peierls::testing::seed() + 5);
  for (int i = 0; i < 100; ++i) {
    const Site2 m = random_site(rng), n = random_site(rng);
    EXPECT_TRUE(same_phase(mu(golden, m).at(n), bicharacter(golden, m, n), golden));
  }
}

TEST(Coboundary, ExamplesAndSymmetry) {
  EXPECT_EQ(coboundary(1, {1, 0}, {0, 1}), ExactPhase::phi(1));
  EXPECT_TRUE(coboundary(1, {1, 0}, {1, 0}).is_identity());
  std::mt19937_64 rng(peierls::testing::seed() + 6);
  for (int i = 0; i < 100; ++i) {
    const Site2 m = random_site(rng), n = random_site(rng);
    EXPECT_EQ(coboundary(3, m, n), coboundary(3, n, m));
    EXPECT_EQ(coboundary(3, m, n).c(), 6 * (m[0] * n[1] + m[1] * n[0]));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(golden).to_string(), "almost_heisenberg");
  EXPECT_EQ(classify(Flux::rational(1, 3)).to_string(), "rational_with_kernel(3)");
  EXPECT_EQ(classify(Flux::rational(0, 1)).to_string(), "rational_with_kernel(1)");
  for (std::int64_t k = -3; k <= 3; ++k) {
    EXPECT_EQ(classify(Flux::rational(2, 7).shifted(k)), classify(Flux::rational(2, 7)));
  }
}
