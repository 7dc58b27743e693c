#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <string>

#include "peierls/flux.hpp"

namespace peierls {

using Site2 = std::array<std::int64_t, 2>;

// Element of the circle group written additively as
//   theta_halves * (theta/2) + pi_units * pi + phi_halves * (phi/2),
// where theta is the flux angle and phi a free gauge angle. The pi
// coefficient is kept in {0, 1}.
class ExactPhase {
 public:
  constexpr ExactPhase() = default;
  constexpr ExactPhase(std::int64_t theta_halves, std::int64_t pi_units, std::int64_t phi_halves)
      : a_(theta_halves), b_(mod2(pi_units)), c_(phi_halves) {}

  static constexpr ExactPhase identity() { return {}; }
  static constexpr ExactPhase theta_halves(std::int64_t k) { return {k, 0, 0}; }
  static constexpr ExactPhase theta(std::int64_t k) { return {2 * k, 0, 0}; }
  static constexpr ExactPhase pi(std::int64_t k) { return {0, k, 0}; }
  static constexpr ExactPhase phi_halves(std::int64_t k) { return {0, 0, k}; }
  static constexpr ExactPhase phi(std::int64_t k) { return {0, 0, 2 * k}; }

  constexpr std::int64_t a() const { return a_; }
  constexpr std::int64_t b() const { return b_; }
  constexpr std::int64_t c() const { return c_; }

  // Identity for irrational theta/2pi and generic phi.
  constexpr bool is_identity() const { return a_ == 0 && b_ == 0 && c_ == 0; }

  constexpr ExactPhase operator+(const ExactPhase& o) const { return {a_ + o.a_, b_ + o.b_, c_ + o.c_}; }
  constexpr ExactPhase operator-(const ExactPhase& o) const { return {a_ - o.a_, b_ - o.b_, c_ - o.c_}; }
  constexpr ExactPhase operator-() const { return {-a_, -b_, -c_}; }
  constexpr ExactPhase& operator+=(const ExactPhase& o) { return *this = *this + o; }
  constexpr ExactPhase operator*(std::int64_t k) const { return {k * a_, k * b_, k * c_}; }

  friend constexpr bool operator==(const ExactPhase&, const ExactPhase&) = default;
  friend constexpr auto operator<=>(const ExactPhase&, const ExactPhase&) = default;

  // exp(i(a theta/2 + b pi + c phi/2)).
  std::complex<double> evaluate(double theta, double phi = 0.0) const;

  // "1", "e^{iθ/2}", "e^{-iθ+iπ}", "e^{3iθ/2+iφ}", ...
  std::string to_string() const;

 private:
  static constexpr std::int64_t mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t c_ = 0;
};

// Canonical representative of `p` at the given flux. Irrational fluxes leave
// the phase unchanged; for nu/N the theta coefficient lands in [0, N) so two
// phases are equal at that flux iff their reductions compare equal.
ExactPhase reduce(const ExactPhase& p, const Flux& flux);

bool is_identity(const ExactPhase& p, const Flux& flux);
bool same_phase(const ExactPhase& x, const ExactPhase& y, const Flux& flux);

// Numeric value at the flux angle; rational fluxes are evaluated from the
// reduced integer angle.
std::complex<double> evaluate(const ExactPhase& p, const Flux& flux, double phi = 0.0);

constexpr std::int64_t wedge(Site2 m, Site2 n) { return m[0] * n[1] - m[1] * n[0]; }

// c(m, n) = exp(i theta m^n).
ExactPhase bicharacter(const Flux& flux, Site2 m, Site2 n);

// gamma(m, n) = exp(i theta m^n / 2), the skew square root of c.
ExactPhase cocycle(const Flux& flux, Site2 m, Site2 n);

// exp(i phi_units * phi (m1 n2 + m2 n1)); changes the cocycle by a coboundary.
ExactPhase coboundary(std::int64_t phi_units, Site2 m, Site2 n);

// A character of Z^2 given by its values on (1,0) and (0,1).
struct DualCharacter {
  ExactPhase on_e1;
  ExactPhase on_e2;

  ExactPhase at(Site2 m) const { return on_e1 * m[0] + on_e2 * m[1]; }

  friend bool operator==(const DualCharacter&, const DualCharacter&) = default;
};

// mu(m)(n) = c(m, n), i.e. (exp(-i theta m2), exp(i theta m1)).
DualCharacter mu(const Flux& flux, Site2 m);

struct Classification {
  enum class Kind { almost_heisenberg, rational_with_kernel };
  Kind kind = Kind::rational_with_kernel;
  std::int64_t kernel_index = 1;  // N for rational nu/N, 0 otherwise

  std::string to_string() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Flux& flux);

}  // namespace peierls
