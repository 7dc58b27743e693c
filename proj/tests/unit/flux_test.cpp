#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "peierls/errors.hpp"
#include "peierls/flux.hpp"

using namespace peierls;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invalid_parameters;
}

}  // namespace

TEST(Flux, RationalIsReducedAndCanonical) {
  const Flux f = Flux::rational(3, 6);
  EXPECT_EQ(f.numerator(), 1);
  EXPECT_EQ(f.denominator(), 2);
  EXPECT_EQ(Flux::rational(7, 3), Flux::rational(1, 3));
  EXPECT_EQ(Flux::rational(-1, 3), Flux::rational(2, 3));
  EXPECT_EQ(Flux::rational(1, -3), Flux::rational(2, 3));
  EXPECT_EQ(Flux::rational(5, 5), Flux::rational(0, 1));
}

TEST(Flux, ShiftByIntegerIsIdentical) {
  for (const Flux& f : {Flux::rational(2, 9), Flux::golden(), Flux::pi_minus_3()}) {
    for (std::int64_t k = -4; k <= 4; ++k) {
      const Flux g = f.shifted(k);
      EXPECT_EQ(g, f);
      EXPECT_EQ(g.to_string(), f.to_string());
      EXPECT_EQ(g.value(), f.value());
    }
  }
}

TEST(Flux, Parse) {
  EXPECT_EQ(Flux::parse("3/6"), Flux::rational(1, 2));
  EXPECT_EQ(Flux::parse("7/3"), Flux::rational(1, 3));
  EXPECT_EQ(Flux::parse("golden"), Flux::golden());
  EXPECT_EQ(Flux::parse("sqrt2"), Flux::sqrt2());
  EXPECT_EQ(Flux::parse("pi3"), Flux::pi_minus_3());
  const Flux d = Flux::parse("0.25");
  EXPECT_TRUE(d.is_irrational());
  EXPECT_EQ(d.value(), 0.25);
  EXPECT_EQ(Flux::parse("1.25"), d);
  EXPECT_EQ(Flux::parse("-0.75"), d);
}

TEST(Flux, ParseErrors) {
  EXPECT_EQ(code_of([] { Flux::parse("banana"); }), Errc::flux_parse);
  EXPECT_EQ(code_of([] { Flux::parse("1/0"); }), Errc::flux_parse);
  EXPECT_EQ(code_of([] { Flux::parse("1/x"); }), Errc::flux_parse);
  EXPECT_EQ(code_of([] { Flux::parse("2"); }), Errc::flux_parse);
  EXPECT_EQ(code_of([] { Flux::parse("2.000"); }), Errc::flux_parse);
  EXPECT_EQ(code_of([] { Flux::parse(""); }), Errc::flux_parse);
}

TEST(Flux, NamedConstants) {
  EXPECT_NEAR(Flux::golden().value(), 0.6180339887498949, 1e-15);
  EXPECT_NEAR(Flux::sqrt2().value(), 0.41421356237309515, 1e-15);
  EXPECT_NEAR(Flux::pi_minus_3().value(), 0.14159265358979312, 1e-15);
  EXPECT_EQ(Flux::golden().to_string(), "golden");
}

TEST(ContinuedFraction, OfRationals) {
  EXPECT_EQ(continued_fraction_of(3, 8), (std::vector<std::int64_t>{0, 2, 1, 2}));
  EXPECT_EQ(continued_fraction_of(-1, 3), (std::vector<std::int64_t>{-1, 1, 2}));
  EXPECT_EQ(continued_fraction_of(5, 1), (std::vector<std::int64_t>{5}));
}

TEST(ContinuedFraction, Convergents) {
  const Flux golden = Flux::golden();
  const auto g = convergents(golden.continued_fraction(), 5);
  const std::vector<Fraction> expected{{1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}};
  EXPECT_EQ(g, expected);
  // pi - 3 = [0; 7, 15, 1, 292, ...]
  const Flux pi3 = Flux::pi_minus_3();
  const auto p = convergents(pi3.continued_fraction(), 4);
  const std::vector<Fraction> pe{{1, 7}, {15, 106}, {16, 113}, {4687, 33102}};
  EXPECT_EQ(p, pe);
  for (const Fraction& f : convergents(pi3.continued_fraction(), 12)) {
    EXPECT_LT(std::abs(static_cast<double>(f.num) / f.den - Flux::pi_minus_3().value()), 1.0 / (f.den * f.den));
  }
}

TEST(ContinuedFraction, DepthErrors) {
  const Flux f = Flux::rational(3, 8);
  const auto cf = f.continued_fraction();
  EXPECT_EQ(convergents(cf, 3).back(), (Fraction{3, 8}));
  EXPECT_EQ(code_of([&] { convergents(cf, 4); }), Errc::depth_exceeds_expansion);
  EXPECT_EQ(code_of([] {
              const Flux golden = Flux::golden();
              convergents(golden.continued_fraction(), 41);
            }), Errc::depth_exceeds_expansion);
}
