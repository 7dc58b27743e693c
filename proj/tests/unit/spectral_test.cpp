#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "farey_oracle.hpp"
#include "harper_oracle.hpp"
#include "peierls/errors.hpp"
#include "peierls/spectral.hpp"
#include "seed.hpp"

using namespace peierls;

namespace {
constexpr double two_pi = 2 * std::numbers::pi;
}

TEST(Bloch, Examples) {
  const auto h0 = bloch_matrix(0, 1, 0.3, 1.1);
  ASSERT_EQ(h0.rows(), 1);
  EXPECT_DOUBLE_EQ(h0(0, 0).real(), 2 * std::cos(0.3) + 2 * std::cos(1.1));

  const auto h = bloch_matrix(1, 2, 0.0, 0.0);
  EXPECT_NEAR(std::abs(h(0, 0) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(1, 1) + 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(0, 1) - 2.0), 0.0, 1e-15);
  const auto ev = hermitian_eigenvalues(h);
  EXPECT_NEAR(ev[0], -2 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(ev[1], 2 * std::sqrt(2.0), 1e-14);
}

TEST(Bloch, Hermitian) {
  std::mt19937_64 rng(peierls::testing::seed());
  std::uniform_real_distribution<double> k(0.0, two_pi);
  std::uniform_int_distribution<std::int64_t> q(1, 30);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t den = q(rng);
    std::int64_t nu = std::uniform_int_distribution<std::int64_t>(0, den - 1)(rng);
    while (std::gcd(nu, den) != 1) nu = (nu + 1) % den;
    const auto h = bloch_matrix(nu, den, k(rng), k(rng));
    EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Bloch, RejectsNonReduced) {
  EXPECT_THROW(bloch_matrix(2, 4, 0, 0), Error);
  EXPECT_THROW(bloch_matrix(3, 3, 0, 0), Error);
  EXPECT_THROW(bloch_matrix(-1, 3, 0, 0), Error);
}

TEST(Bloch, HalfFluxClosedForm) {
  std::mt19937_64 rng(peierls::testing::seed() + 1);
  std::uniform_real_distribution<double> k(0.0, two_pi);
  for (int i = 0; i < 100; ++i) {
    const double k1 = k(rng), k2 = k(rng);
    const auto ev = hermitian_eigenvalues(bloch_matrix(1, 2, k1, k2));
    EXPECT_NEAR(ev[1], oracle::half_flux_level(k1, k2), 1e-12);
    EXPECT_NEAR(ev[0], -oracle::half_flux_level(k1, k2), 1e-12);
  }
}

TEST(Spectrum, ZeroFlux) {
  const auto s = spectrum(Flux::rational(0, 1), 200);
  ASSERT_EQ(s.band_intervals.size(), 1u);
  EXPECT_NEAR(s.band_intervals[0].lo, -4.0, 1e-3);
  EXPECT_NEAR(s.band_intervals[0].hi, 4.0, 1e-3);
}

TEST(Spectrum, HalfFluxBandsTouch) {
  const auto s = spectrum(Flux::rational(1, 2), 200);
  ASSERT_EQ(s.bands.size(), 2u);
  EXPECT_NEAR(s.bands[0].lo, -2 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.bands[0].hi, 0.0, 1e-12);
  EXPECT_NEAR(s.bands[1].lo, 0.0, 1e-12);
  EXPECT_NEAR(s.bands[1].hi, 2 * std::sqrt(2.0), 1e-12);
  ASSERT_EQ(s.band_intervals.size(), 1u);
}

TEST(Spectrum, ThirdFluxBandEdges) {
  // k_grid = 60 contains the momenta where the band edges are attained.
  const auto s = spectrum(Flux::rational(1, 3), 60);
  const auto edges = oracle::third_flux_band_edges();
  ASSERT_EQ(s.band_intervals.size(), 3u);
  for (std::size_t b = 0; b < 3; ++b) {
    EXPECT_NEAR(s.band_intervals[b].lo, edges[2 * b], 1e-9);
    EXPECT_NEAR(s.band_intervals[b].hi, edges[2 * b + 1], 1e-9);
  }
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    EXPECT_NEAR(s.samples[i], -s.samples[s.samples.size() - 1 - i], 1e-9);
  }
}

TEST(Spectrum, GeneralInvariants) {
  for (const auto& f : farey_fractions(8)) {
    const auto s = spectrum(Flux::rational(f.num, f.den), 16);
    EXPECT_EQ(s.samples.size(), static_cast<std::size_t>(16 * 16 * f.den));
    EXPECT_LE(static_cast<std::int64_t>(s.band_intervals.size()), f.den);
    EXPECT_GE(s.samples.front(), -4.0 - 1e-12);
    EXPECT_LE(s.samples.back(), 4.0 + 1e-12);
    for (std::size_t i = 1; i < s.band_intervals.size(); ++i) {
      EXPECT_LT(s.band_intervals[i - 1].hi, s.band_intervals[i].lo);
    }
  }
  EXPECT_THROW(spectrum(Flux::rational(1, 3), 3), Error);
  EXPECT_THROW(spectrum(Flux::golden(), 16), Error);
}

TEST(Spectrum, PeriodicInFlux) {
  const auto a = spectrum(Flux::rational(2, 7), 12);
  const auto b = spectrum(Flux::rational(2, 7).shifted(1), 12);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.band_intervals, b.band_intervals);
}

TEST(Spectrum, MatchesPeriodicTruncationOfRepresentation) {
  for (const Flux& f : {Flux::rational(1, 4), Flux::rational(1, 3), Flux::rational(2, 5)}) {
    const auto c = representation_consistency(f);
    EXPECT_EQ(c.truncated.size(), static_cast<std::size_t>(c.side * c.side));
    EXPECT_LT(c.max_error, 1e-9) << f.to_string();
  }
  EXPECT_EQ(representation_consistency(Flux::rational(1, 4)).side, 8);
}

TEST(Farey, MatchesRecurrenceOracle) {
  for (int n = 1; n <= 25; ++n) {
    auto expected = oracle::farey_sequence(n);
    expected.pop_back();  // drop 1/1, which is 0 after canonicalization
    const auto got = farey_fractions(n);
    ASSERT_EQ(got.size(), expected.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].num, expected[i].first);
      EXPECT_EQ(got[i].den, expected[i].second);
    }
    std::int64_t count = 0;
    for (int q = 1; q <= n; ++q) count += oracle::totient(q);
    EXPECT_EQ(static_cast<std::int64_t>(got.size()), count);
  }
  EXPECT_EQ(farey_fractions(10).size(), 32u);  // 31 interior values plus 0
}

TEST(Butterfly, SmallCases) {
  const auto one = butterfly(1, 20);
  for (const auto& r : one.rows) {
    EXPECT_EQ(r.num, 0);
    EXPECT_EQ(r.den, 1);
  }
  EXPECT_NEAR(one.rows.front().energy, -4.0, 1e-12);
  EXPECT_NEAR(one.rows.back().energy, 4.0, 1e-12);

  const auto two = butterfly(2, 20);
  double lo = 0, hi = 0;
  for (const auto& r : two.rows) {
    if (r.den != 2) continue;
    lo = std::min(lo, r.energy);
    hi = std::max(hi, r.energy);
  }
  EXPECT_GE(lo, -2 * std::sqrt(2.0) - 1e-12);
  EXPECT_LE(hi, 2 * std::sqrt(2.0) + 1e-12);
}

TEST(Butterfly, SymmetricAndDeterministic) {
  const auto a = butterfly(10, 20, 1);
  const auto b = butterfly(10, 20, 4);
  EXPECT_EQ(a, b);
  const auto c = check_symmetry(a);
  EXPECT_EQ(c.flux_values, 32u);
  EXPECT_TRUE(c.holds(1e-9)) << c.flux_mirror_error << " " << c.energy_mirror_error;
  for (std::size_t i = 1; i < a.rows.size(); ++i) {
    const auto& p = a.rows[i - 1];
    const auto& q = a.rows[i];
    const bool ordered = p.num * q.den < q.num * p.den || (p.num == q.num && p.den == q.den && p.energy <= q.energy);
    ASSERT_TRUE(ordered) << i;
  }
}

TEST(Butterfly, SymmetryCheckCatchesTampering) {
  auto a = butterfly(5, 8);
  a.rows[a.rows.size() / 2].energy += 1e-6;
  EXPECT_FALSE(check_symmetry(a).holds(1e-9));
}

TEST(Approximants, Golden) {
  const auto s = approximant_spectra(Flux::golden(), 5, 8);
  const std::vector<Fraction> expected{{1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}};
  EXPECT_EQ(s.convergents, expected);
  EXPECT_EQ(s.spectra.size(), 5u);
  EXPECT_EQ(s.distances.size(), 4u);
  const auto one = approximant_spectra(Flux::sqrt2(), 1, 8);
  EXPECT_EQ(one.spectra.size(), 1u);
  EXPECT_TRUE(one.distances.empty());
  EXPECT_THROW(approximant_spectra(Flux::golden(), 50, 8), Error);
}

TEST(Hausdorff, Basic) {
  const std::vector<double> a{0.0, 1.0}, b{0.0, 1.0, 3.0};
  EXPECT_DOUBLE_EQ(hausdorff_distance(a, b), 2.0);
  EXPECT_DOUBLE_EQ(hausdorff_distance(a, a), 0.0);
}
