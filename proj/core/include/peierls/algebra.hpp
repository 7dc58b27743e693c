#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "peierls/flux.hpp"
#include "peierls/phase.hpp"

namespace peierls {

// Generators of Z~^2_theta (p1, p2) and Z~^2_{-theta} (q1, q2):
//   p1 p2 p1^-1 p2^-1 = e^{i theta},  q1 q2 q1^-1 q2^-1 = e^{-i theta},
// with every p commuting with every q.
enum class Generator { p1, p2, q1, q2 };

const char* to_string(Generator g) noexcept;

struct Exponents {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;

  bool is_zero() const { return p1 == 0 && p2 == 0 && q1 == 0 && q2 == 0; }
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

// phase * p1^j1 p2^j2 q1^k1 q2^k2, always in this normal order.
struct Monomial {
  Exponents exponents;
  ExactPhase phase;

  static Monomial unit() { return {}; }
  static Monomial generator(Generator g, std::int64_t power = 1);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Product in normal order. The only flux dependence is phase reduction.
Monomial multiply(const Monomial& x, const Monomial& y, const Flux& flux);

// Finite linear combination of monomials. At most one term per
// (exponents, phase) pair; zero coefficients are dropped. operator== is exact
// structural equality.
class AlgebraElement {
 public:
  using Coefficient = std::complex<double>;
  using Terms = std::map<Monomial, Coefficient>;

  AlgebraElement() = default;

  static AlgebraElement scalar(Coefficient c);
  static AlgebraElement from(const Monomial& m, Coefficient c = 1.0);
  static AlgebraElement generator(Generator g, std::int64_t power = 1);

  void add_term(const Monomial& m, Coefficient c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Coefficient c, const AlgebraElement& a);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

// Phases reduced at `flux`, like terms merged.
AlgebraElement canonicalize(const AlgebraElement& x, const Flux& flux);
bool structurally_equal(const AlgebraElement& x, const AlgebraElement& y, const Flux& flux);

// Phases evaluated at (theta, phi), like-exponent terms merged, coefficients
// compared to `tol`.
bool numerically_equal(const AlgebraElement& x, const AlgebraElement& y, const Flux& flux,
                       double phi = 0.0, double tol = 1e-12);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const Flux& flux);

// Generators are unitary: g^dagger = g^-1.
AlgebraElement adjoint(const AlgebraElement& x, const Flux& flux);

// g^power x g^-power.
AlgebraElement conjugate_by_translation(const AlgebraElement& x, Generator g, const Flux& flux,
                                        std::int64_t power = 1);

// Rotation by pi/2: p1 -> p2, p2 -> p1^-1, q1 -> q2, q2 -> q1^-1.
AlgebraElement conjugate_by_zeta(const AlgebraElement& x, const Flux& flux);

// Fixed by conjugation with p1, p2 and zeta. Irrational flux only.
bool is_invariant(const AlgebraElement& x, const Flux& flux);

// Self-adjoint invariant elements spanning the invariant subalgebra over the
// exponent box |k| <= max_j, found by imposing translation invariance,
// symmetrizing over zeta-orbits and keeping orbit sums compatible with the
// adjoint. The first max_j + 1 entries are the axis sums
// [1, q1+q1^-1+q2+q2^-1, ..., q1^j+q1^-j+q2^j+q2^-j]. After them come the
// off-axis orbit sums, e.g. e^{iθ/2}(q1 q2 + ...): with the half-angle phase
// these are self-adjoint too, so they belong to the invariant space.
std::vector<AlgebraElement> derive_invariant_basis(int max_j, const Flux& flux);

// q1 + q1^-1 + q2 + q2^-1.
AlgebraElement harper_element();

// "(2+0i)·e^{iθ/2}·p1^2 p2^-1 q1^0 q2^3", terms joined by " + ".
std::string render(const AlgebraElement& x);
std::string render(const Monomial& m, AlgebraElement::Coefficient c);

}  // namespace peierls
