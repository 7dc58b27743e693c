#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "peierls/algebra.hpp"
#include "peierls/flux.hpp"
#include "peierls/phase.hpp"
#include "peierls/report.hpp"

namespace peierls {

// Integer polynomial of degree <= 2 in the site coordinates:
//   constant + l1 m1 + l2 m2 + q11 m1^2 + q12 m1 m2 + q22 m2^2
struct QuadraticForm {
  std::int64_t constant = 0;
  std::array<std::int64_t, 2> linear{};
  std::int64_t q11 = 0;
  std::int64_t q12 = 0;
  std::int64_t q22 = 0;

  std::int64_t at(Site2 m) const {
    return constant + linear[0] * m[0] + linear[1] * m[1] + q11 * m[0] * m[0] + q12 * m[0] * m[1] +
           q22 * m[1] * m[1];
  }
  bool is_zero() const { return *this == QuadraticForm{}; }
  bool is_constant() const { return linear == std::array<std::int64_t, 2>{} && q11 == 0 && q12 == 0 && q22 == 0; }

  QuadraticForm operator+(const QuadraticForm& o) const;
  QuadraticForm operator-() const;
  QuadraticForm operator-(const QuadraticForm& o) const { return *this + (-o); }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// m -> matrix * m + shift with matrix a signed permutation.
struct AffineMap {
  std::array<std::array<std::int64_t, 2>, 2> matrix{{{1, 0}, {0, 1}}};
  Site2 shift{};

  static AffineMap identity() { return {}; }
  static AffineMap translation(Site2 s) { return {{{{1, 0}, {0, 1}}}, s}; }

  Site2 apply(Site2 m) const {
    return {matrix[0][0] * m[0] + matrix[0][1] * m[1] + shift[0], matrix[1][0] * m[0] + matrix[1][1] * m[1] + shift[1]};
  }
  // (*this)(inner(m))
  AffineMap after(const AffineMap& inner) const;
  AffineMap inverse() const;
  bool is_signed_permutation() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// f(sigma(m)) as a form in m.
QuadraticForm pullback(const QuadraticForm& f, const AffineMap& sigma);

// Site-dependent exact phase: theta/2-units and phi/2-units given by integer
// forms, plus a constant multiple of pi.
struct PhaseForm {
  QuadraticForm theta_halves;
  std::int64_t pi_units = 0;
  QuadraticForm phi_halves;

  static PhaseForm constant(const ExactPhase& p);

  ExactPhase at(Site2 m) const { return {theta_halves.at(m), pi_units, phi_halves.at(m)}; }
  bool is_constant() const { return theta_halves.is_constant() && phi_halves.is_constant(); }

  PhaseForm operator+(const PhaseForm& o) const;
  PhaseForm operator-() const;

  friend bool operator==(const PhaseForm& a, const PhaseForm& b) {
    return a.theta_halves == b.theta_halves && (a.pi_units - b.pi_units) % 2 == 0 && a.phi_halves == b.phi_halves;
  }
};

PhaseForm pullback(const PhaseForm& f, const AffineMap& sigma);

std::string describe(const PhaseForm& f);

// Unitary on l2(Z^d), d in {1, 2}, sending the basis vector at m to
// exp(i phase(m)) times the basis vector at site_map(m). Composition is
// ordinary operator composition: (A * B) applies B first.
class BasisMapOperator {
 public:
  struct Image {
    ExactPhase phase;
    Site2 site;
  };

  BasisMapOperator(int dimension, AffineMap site_map, PhaseForm phase);

  static BasisMapOperator identity(int dimension) { return {dimension, AffineMap::identity(), {}}; }
  static BasisMapOperator diagonal(int dimension, PhaseForm phase) {
    return {dimension, AffineMap::identity(), std::move(phase)};
  }
  static BasisMapOperator scalar(int dimension, const ExactPhase& p) {
    return diagonal(dimension, PhaseForm::constant(p));
  }

  int dimension() const { return dimension_; }
  const AffineMap& site_map() const { return site_map_; }
  const PhaseForm& phase_form() const { return phase_; }

  Image apply(Site2 m) const { return {phase_.at(m), site_map_.apply(m)}; }

  BasisMapOperator operator*(const BasisMapOperator& rhs) const;
  BasisMapOperator inverse() const;
  BasisMapOperator pow(std::int64_t n) const;

  friend bool operator==(const BasisMapOperator&, const BasisMapOperator&) = default;

 private:
  int dimension_;
  AffineMap site_map_;
  PhaseForm phase_;
};

// A site where x and y act differently at the given flux (phi generic), or
// nullopt if they are the same operator. Exact.
std::optional<Site2> find_difference(const BasisMapOperator& x, const BasisMapOperator& y, const Flux& flux);

inline bool equal_at(const BasisMapOperator& x, const BasisMapOperator& y, const Flux& flux) {
  return !find_difference(x, y, flux).has_value();
}

// Irreducible representation of Z~^2_theta on l2(Z):
//   U(p1): m -> e^{i theta m} m,   U(p2): m -> m+1.
struct DistinguishedRep {
  Flux flux;
  BasisMapOperator p1;
  BasisMapOperator p2;
};

DistinguishedRep build_distinguished(const Flux& flux);

// Representation of Z~^2_theta x Z~^2_{-theta} and the quarter turn on l2(Z^2).
// At gauge_units k != 0 the translations carry the extra phases e^{i k phi m2}
// (first direction) and e^{i k phi m1} (second direction); the rotation is the
// canonical one transported by the gauge intertwiner.
struct WavefunctionRep {
  Flux flux;
  std::int64_t gauge_units = 0;
  BasisMapOperator p1;
  BasisMapOperator p2;
  BasisMapOperator q1;
  BasisMapOperator q2;
  BasisMapOperator zeta;

  const BasisMapOperator& get(Generator g) const;
};

WavefunctionRep build_wavefunction(const Flux& flux, std::int64_t gauge_units = 0);

// Checks the commutator relations of both factors, p/q commutation, the
// quarter-turn action on all four generators and zeta^4 = 1, exactly.
RelationReport verify_relations(const WavefunctionRep& rep);
RelationReport verify_relations(const DistinguishedRep& rep);

// S = diag(exp(-i k phi m1 m2)). It carries gauge k into the canonical gauge:
// W(g) S = S W_k(g).
BasisMapOperator gauge_intertwiner(std::int64_t gauge_units);

// Intertwining check on the four translation generators.
RelationReport gauge_check(const Flux& flux, std::int64_t gauge_units);

// A site where S and the canonical rotation fail to commute, if any.
std::optional<Site2> intertwiner_rotation_defect(const Flux& flux, std::int64_t gauge_units);

// The operator realizing a normal-ordered monomial under `rep`.
BasisMapOperator realize(const Monomial& m, const WavefunctionRep& rep);

struct CommutantReport {
  std::int64_t box = 0;
  std::int64_t words_checked = 0;
  std::vector<Exponents> commuting;    // words commuting with W(p1) and W(p2)
  std::vector<Exponents> mismatches;   // commuting iff q-word fails here
  bool holds() const { return mismatches.empty(); }
};

// Scans words W(p1)^j1 W(p2)^j2 W(q1)^k1 W(q2)^k2 with |exponents| <= box and
// checks that exactly the pure q-words commute with both W(p1) and W(p2).
CommutantReport commutant_monomial_check(const Flux& flux, std::int64_t box);

// Coordinate box lo..hi (inclusive). One-dimensional windows use only the
// first coordinate.
struct Window {
  int dimension = 1;
  Site2 lo{};
  Site2 hi{};

  static Window line(std::int64_t lo, std::int64_t hi) { return {1, {lo, 0}, {hi, 0}}; }
  static Window square(std::int64_t lo, std::int64_t hi) { return {2, {lo, lo}, {hi, hi}}; }

  std::int64_t extent(int axis) const { return hi[axis] - lo[axis] + 1; }
  std::size_t size() const;
  bool contains(Site2 m) const;
  std::size_t index(Site2 m) const;  // first coordinate outermost
  Site2 site(std::size_t index) const;
};

enum class Boundary { open, periodic };

struct TruncatedOperator {
  Window window;
  Boundary boundary = Boundary::open;
  Eigen::MatrixXcd matrix;
};

// Matrix of `op` on the window. Open boundaries drop images leaving the
// window; periodic boundaries wrap them and need a rational flux for which
// the phase is periodic over the window (Errc::incompatible_periodicity).
TruncatedOperator truncate(const BasisMapOperator& op, const Window& window, Boundary boundary, const Flux& flux,
                           double phi = 0.0);

// Sum of coefficient * realize(monomial) truncated to the window.
TruncatedOperator truncate(const AlgebraElement& x, const WavefunctionRep& rep, const Window& window,
                           Boundary boundary, double phi = 0.0);

}  // namespace peierls
