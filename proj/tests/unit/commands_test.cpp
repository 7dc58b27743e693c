#include <gtest/gtest.h>

#include "commands.hpp"
#include "peierls/errors.hpp"

using namespace peierls;
using cli::Format;

TEST(Classify, Golden) {
  const auto r = cli::classify(Flux::golden(), Format::text);
  EXPECT_EQ(r.output, "classification: almost_heisenberg\nflux: 0.6180339887\n");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Classify, RationalIsReduced) {
  EXPECT_EQ(cli::classify(Flux::parse("3/6"), Format::text).output,
            "classification: rational_with_kernel(2)\nflux: 1/2\n");
  EXPECT_EQ(cli::classify(Flux::parse("7/3"), Format::text).output,
            "classification: rational_with_kernel(3)\nflux: 1/3\n");
}

TEST(Classify, JsonIsParseable) {
  const auto r = cli::classify(Flux::parse("2/5"), Format::json);
  EXPECT_NE(r.output.find("\"classification\""), std::string::npos);
}

TEST(Verify, PassesAndCorruptFails) {
  const auto ok = cli::verify(Flux::golden(), 0, false, Format::text);
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.output.find("FAIL"), std::string::npos);
  const auto bad = cli::verify(Flux::golden(), 0, true, Format::text);
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.output.find("RELATION p1p2p1^-1p2^-1 = e^{iθ}: FAIL"), std::string::npos);
  EXPECT_NE(bad.output.find("witness site"), std::string::npos);
}

TEST(Verify, RationalAndGauged) {
  EXPECT_EQ(cli::verify(Flux::parse("1/5"), 0, false, Format::text).exit_code, 0);
  EXPECT_EQ(cli::verify(Flux::sqrt2(), 5, false, Format::text).exit_code, 0);
}

TEST(Invariant, ListsAxisThenOffAxis) {
  const auto r = cli::invariant(Flux::golden(), 2, Format::text);
  EXPECT_EQ(r.exit_code, 0);
  const auto j2 = r.output.find("j=2:");
  const auto off = r.output.find("off-axis 1:");
  ASSERT_NE(j2, std::string::npos);
  ASSERT_NE(off, std::string::npos);
  EXPECT_LT(j2, off);
  EXPECT_NE(r.output.find("j=1 is the Harper element: yes"), std::string::npos);
}

TEST(Invariant, RejectsRationalFlux) {
  try {
    cli::invariant(Flux::parse("1/3"), 1, Format::text);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::rational_flux_unsupported);
  }
}

TEST(Periodicity, OutputIdenticalUnderIntegerShift) {
  for (const auto& [a, b] : {std::pair{"2/7", "9/7"}, {"0.25", "1.25"}, {"-1/3", "2/3"}}) {
    const Flux fa = Flux::parse(a);
    const Flux fb = Flux::parse(b);
    EXPECT_EQ(cli::classify(fa, Format::text).output, cli::classify(fb, Format::text).output) << a;
    EXPECT_EQ(cli::spectrum(fa, 16, 4, Format::text).output, cli::spectrum(fb, 16, 4, Format::text).output) << a;
  }
  const Flux g = Flux::golden();
  const Flux shifted = Flux::irrational(g.value() + 1.0, std::vector<std::int64_t>(41, 1), "golden");
  EXPECT_EQ(cli::invariant(g, 2, Format::text).output, cli::invariant(shifted, 2, Format::text).output);
}

TEST(GaugeCheck, NamesPhaseFormAndPasses) {
  const auto r = cli::gauge_check(Flux::golden(), 3, 0, Format::text);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("-3·φ·m1m2"), std::string::npos);
  EXPECT_NE(r.output.find("S commutes with W(zeta): no"), std::string::npos);
}

TEST(Landau, WarnsOnSmallTruncation) {
  const auto small = cli::landau(1.0, 1.0, 4, Format::text);
  EXPECT_EQ(small.exit_code, 0);
  EXPECT_FALSE(small.warnings.empty());
  const auto full = cli::landau(1.0, 1.0, 30, Format::text);
  EXPECT_EQ(full.exit_code, 0);
  EXPECT_TRUE(full.warnings.empty());
}

TEST(Spectrum, HalfFluxSingleBand) {
  const auto r = cli::spectrum(Flux::parse("1/2"), 8, 4, Format::text);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("band 1: [-2.82842712475, 2.82842712475]"), std::string::npos);
  EXPECT_NE(r.output.find("checks: PASS"), std::string::npos);
}
