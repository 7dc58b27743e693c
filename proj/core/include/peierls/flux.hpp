#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace peierls {

// Magnetic flux per plaquette in units of the flux quantum, reduced mod 1.
// The commutator angle is theta = 2*pi*value().
class Flux {
 public:
  enum class Kind { rational, irrational };

  // nu/den reduced to lowest terms with 0 <= nu < den.
  static Flux rational(std::int64_t nu, std::int64_t den);

  // `cf` is a continued fraction [a0; a1, a2, ...] of the flux; a0 is
  // discarded and `value` reduced into [0, 1).
  static Flux irrational(double value, std::vector<std::int64_t> cf, std::string name = {});

  static Flux golden();      // (sqrt(5) - 1) / 2
  static Flux sqrt2();       // sqrt(2) - 1
  static Flux pi_minus_3();  // pi - 3

  // "p/q" | "golden" | "sqrt2" | "pi3" | decimal literal.
  static Flux parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  bool is_irrational() const noexcept { return kind_ == Kind::irrational; }

  // Only meaningful for rational fluxes; irrational fluxes report 0/0.
  std::int64_t numerator() const noexcept { return nu_; }
  std::int64_t denominator() const noexcept { return den_; }

  double value() const noexcept { return value_; }
  double theta() const noexcept;

  // [0; a1, a2, ...]; for rational fluxes the finite expansion of nu/den.
  std::span<const std::int64_t> continued_fraction() const& noexcept { return cf_; }
  std::span<const std::int64_t> continued_fraction() const&& = delete;

  // Flux + k for integer k; identical to *this by periodicity.
  Flux shifted(std::int64_t k) const;

  const std::string& name() const noexcept { return name_; }

  // "nu/den" for rational fluxes, the constant's name or "%.10f" value otherwise.
  std::string to_string() const;

  friend bool operator==(const Flux& a, const Flux& b) noexcept;

 private:
  Flux() = default;

  Kind kind_ = Kind::rational;
  std::int64_t nu_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
  std::vector<std::int64_t> cf_;
  std::string name_;
};

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Finite continued fraction of num/den (den > 0), a0 = floor(num/den).
std::vector<std::int64_t> continued_fraction_of(std::int64_t num, std::int64_t den);

// Convergents h_i/k_i for i = 1..depth of [a0; a1, ...] (the a0-only
// convergent is skipped). Throws Errc::depth_exceeds_expansion if the
// expansion is too short or a convergent overflows.
std::vector<Fraction> convergents(std::span<const std::int64_t> cf, int depth);

}  // namespace peierls
