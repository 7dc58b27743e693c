#include "peierls/representations.hpp"

#include <cstdlib>

#include "peierls/errors.hpp"

namespace peierls {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// c + a0 m1 + a1 m2
struct LinearForm {
  std::int64_t c = 0;
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
};

QuadraticForm product(const LinearForm& x, const LinearForm& y) {
  QuadraticForm f;
  f.constant = x.c * y.c;
  f.linear = {x.c * y.a0 + y.c * x.a0, x.c * y.a1 + y.c * x.a1};
  f.q11 = x.a0 * y.a0;
  f.q12 = x.a0 * y.a1 + x.a1 * y.a0;
  f.q22 = x.a1 * y.a1;
  return f;
}

QuadraticForm scaled(const QuadraticForm& f, std::int64_t k) {
  return {k * f.constant, {k * f.linear[0], k * f.linear[1]}, k * f.q11, k * f.q12, k * f.q22};
}

QuadraticForm linear_form(std::int64_t l1, std::int64_t l2) { return {0, {l1, l2}, 0, 0, 0}; }

}  // namespace

QuadraticForm QuadraticForm::operator+(const QuadraticForm& o) const {
  return {constant + o.constant, {linear[0] + o.linear[0], linear[1] + o.linear[1]}, q11 + o.q11, q12 + o.q12,
          q22 + o.q22};
}

QuadraticForm QuadraticForm::operator-() const { return scaled(*this, -1); }

AffineMap AffineMap::after(const AffineMap& inner) const {
  AffineMap out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.matrix[i][j] = matrix[i][0] * inner.matrix[0][j] + matrix[i][1] * inner.matrix[1][j];
    }
  }
  const Site2 s = apply(inner.shift);
  out.shift = s;
  return out;
}

AffineMap AffineMap::inverse() const {
  // Signed permutations are orthogonal: the inverse matrix is the transpose.
  AffineMap out;
  out.matrix = {{{matrix[0][0], matrix[1][0]}, {matrix[0][1], matrix[1][1]}}};
  out.shift = {0, 0};
  const Site2 s = out.apply(shift);
  out.shift = {-s[0], -s[1]};
  return out;
}

bool AffineMap::is_signed_permutation() const {
  for (int i = 0; i < 2; ++i) {
    int nonzero_row = 0;
    int nonzero_col = 0;
    for (int j = 0; j < 2; ++j) {
      if (matrix[i][j] != 0) {
        if (std::abs(matrix[i][j]) != 1) return false;
        ++nonzero_row;
      }
      if (matrix[j][i] != 0) ++nonzero_col;
    }
    if (nonzero_row != 1 || nonzero_col != 1) return false;
  }
  return true;
}

QuadraticForm pullback(const QuadraticForm& f, const AffineMap& sigma) {
  const LinearForm x0{sigma.shift[0], sigma.matrix[0][0], sigma.matrix[0][1]};
  const LinearForm x1{sigma.shift[1], sigma.matrix[1][0], sigma.matrix[1][1]};
  QuadraticForm out;
  out.constant = f.constant;
  out = out + scaled(product(x0, {1, 0, 0}), f.linear[0]) + scaled(product(x1, {1, 0, 0}), f.linear[1]);
  out = out + scaled(product(x0, x0), f.q11) + scaled(product(x0, x1), f.q12) + scaled(product(x1, x1), f.q22);
  return out;
}

PhaseForm PhaseForm::constant(const ExactPhase& p) {
  PhaseForm f;
  f.theta_halves.constant = p.a();
  f.pi_units = p.b();
  f.phi_halves.constant = p.c();
  return f;
}

PhaseForm PhaseForm::operator+(const PhaseForm& o) const {
  return {theta_halves + o.theta_halves, floor_mod(pi_units + o.pi_units, 2), phi_halves + o.phi_halves};
}

PhaseForm PhaseForm::operator-() const { return {-theta_halves, floor_mod(-pi_units, 2), -phi_halves}; }

PhaseForm pullback(const PhaseForm& f, const AffineMap& sigma) {
  return {pullback(f.theta_halves, sigma), f.pi_units, pullback(f.phi_halves, sigma)};
}

namespace {

void append_form(std::string& out, const QuadraticForm& f, const char* unit) {
  const std::pair<std::int64_t, const char*> terms[] = {
      {f.constant, ""}, {f.linear[0], "m1"}, {f.linear[1], "m2"}, {f.q11, "m1^2"}, {f.q12, "m1m2"}, {f.q22, "m2^2"}};
  for (const auto& [coeff, mono] : terms) {
    if (coeff == 0) continue;
    out += coeff < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
    // coefficients count half units
    const std::int64_t mag = std::abs(coeff);
    const std::int64_t whole = mag % 2 == 0 ? mag / 2 : mag;
    if (whole != 1) out += std::to_string(whole) + "·";
    out += unit;
    if (mag % 2 != 0) out += "/2";
    if (*mono) out += std::string("·") + mono;
  }
}

}  // namespace

std::string describe(const PhaseForm& f) {
  std::string out;
  append_form(out, f.theta_halves, "θ");
  if (floor_mod(f.pi_units, 2) != 0) out += out.empty() ? "π" : " + π";
  append_form(out, f.phi_halves, "φ");
  return out.empty() ? "0" : out;
}

BasisMapOperator::BasisMapOperator(int dimension, AffineMap site_map, PhaseForm phase)
    : dimension_(dimension), site_map_(site_map), phase_(std::move(phase)) {
  if (dimension != 1 && dimension != 2) {
    throw Error(Errc::invalid_parameters, "basis-map operators act on Z or Z^2");
  }
  if (!site_map_.is_signed_permutation()) {
    throw Error(Errc::invalid_parameters, "site map must be a signed permutation plus shift");
  }
  if (dimension == 1 && (site_map_.matrix[1][1] != 1 || site_map_.matrix[0][1] != 0 || site_map_.shift[1] != 0)) {
    throw Error(Errc::invalid_parameters, "one-dimensional site map touches the second coordinate");
  }
  phase_.pi_units = floor_mod(phase_.pi_units, 2);
}

BasisMapOperator BasisMapOperator::operator*(const BasisMapOperator& rhs) const {
  if (dimension_ != rhs.dimension_) throw Error(Errc::invalid_parameters, "dimension mismatch in composition");
  // rhs first: phase_rhs(m) + phase_this(sigma_rhs(m)), site sigma_this(sigma_rhs(m)).
  return {dimension_, site_map_.after(rhs.site_map_), rhs.phase_ + pullback(phase_, rhs.site_map_)};
}

BasisMapOperator BasisMapOperator::inverse() const {
  const AffineMap inv = site_map_.inverse();
  return {dimension_, inv, -pullback(phase_, inv)};
}

BasisMapOperator BasisMapOperator::pow(std::int64_t n) const {
  BasisMapOperator base = n < 0 ? inverse() : *this;
  BasisMapOperator out = identity(dimension_);
  for (std::int64_t i = 0, count = n < 0 ? -n : n; i < count; ++i) out = out * base;
  return out;
}

std::optional<Site2> find_difference(const BasisMapOperator& x, const BasisMapOperator& y, const Flux& flux) {
  if (x.dimension() != y.dimension()) return Site2{0, 0};
  const int dim = x.dimension();
  auto differs_at = [&](Site2 m) {
    const auto ix = x.apply(m);
    const auto iy = y.apply(m);
    return ix.site != iy.site || !is_identity(ix.phase - iy.phase, flux);
  };
  auto scan = [&](std::int64_t lo, std::int64_t hi) -> std::optional<Site2> {
    for (std::int64_t a = lo; a < hi; ++a) {
      if (dim == 1) {
        if (differs_at({a, 0})) return Site2{a, 0};
        continue;
      }
      for (std::int64_t b = lo; b < hi; ++b) {
        if (differs_at({a, b})) return Site2{a, b};
      }
    }
    return std::nullopt;
  };

  // Affine maps and degree-2 integer forms are determined by their values on
  // {-1,0,1}^d.
  if (auto w = scan(-1, 2)) return w;
  if (x.phase_form() == y.phase_form() || flux.is_irrational()) return std::nullopt;
  // At flux nu/N the theta part is 2N-periodic in each coordinate.
  return scan(0, 2 * flux.denominator());
}

DistinguishedRep build_distinguished(const Flux& flux) {
  PhaseForm diag;
  diag.theta_halves = linear_form(2, 0);  // theta * m
  return {flux, BasisMapOperator(1, AffineMap::identity(), diag),
          BasisMapOperator(1, AffineMap::translation({1, 0}), {})};
}

const BasisMapOperator& WavefunctionRep::get(Generator g) const {
  switch (g) {
    case Generator::p1: return p1;
    case Generator::p2: return p2;
    case Generator::q1: return q1;
    case Generator::q2: return q2;
  }
  return p1;
}

BasisMapOperator gauge_intertwiner(std::int64_t gauge_units) {
  PhaseForm s;
  s.phi_halves.q12 = -2 * gauge_units;  // -k phi m1 m2
  return BasisMapOperator::diagonal(2, s);
}

WavefunctionRep build_wavefunction(const Flux& flux, std::int64_t gauge_units) {
  const std::int64_t k = gauge_units;
  auto translation = [&](Site2 shift, QuadraticForm theta_part, QuadraticForm phi_part) {
    return BasisMapOperator(2, AffineMap::translation(shift), PhaseForm{theta_part, 0, phi_part});
  };
  const QuadraticForm gauge_m2 = linear_form(0, 2 * k);  // k phi m2
  const QuadraticForm gauge_m1 = linear_form(2 * k, 0);  // k phi m1

  WavefunctionRep rep{
      flux,
      k,
      translation({1, 0}, linear_form(0, 1), gauge_m2),   // e^{ i theta m2 / 2}
      translation({0, 1}, linear_form(-1, 0), gauge_m1),  // e^{-i theta m1 / 2}
      translation({1, 0}, linear_form(0, -1), gauge_m2),  // e^{-i theta m2 / 2}
      translation({0, 1}, linear_form(1, 0), gauge_m1),   // e^{ i theta m1 / 2}
      BasisMapOperator(2, AffineMap{{{{0, -1}, {1, 0}}}, {0, 0}}, {}),
  };
  if (k != 0) {
    const BasisMapOperator s = gauge_intertwiner(k);
    rep.zeta = s.inverse() * rep.zeta * s;
  }
  return rep;
}

namespace {

void add_check(RelationReport& report, std::string name, const BasisMapOperator& lhs, const BasisMapOperator& rhs,
               const Flux& flux) {
  const auto witness = find_difference(lhs, rhs, flux);
  std::string details;
  if (witness) {
    const auto l = lhs.apply(*witness);
    const auto r = rhs.apply(*witness);
    details = "lhs -> " + reduce(l.phase, flux).to_string() + "@(" + std::to_string(l.site[0]) + "," +
              std::to_string(l.site[1]) + "), rhs -> " + reduce(r.phase, flux).to_string() + "@(" +
              std::to_string(r.site[0]) + "," + std::to_string(r.site[1]) + ")";
  } else {
    details = "exact";
  }
  report.add(std::move(name), !witness, std::move(details), witness);
}

BasisMapOperator commutator(const BasisMapOperator& a, const BasisMapOperator& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace

RelationReport verify_relations(const WavefunctionRep& rep) {
  const Flux& flux = rep.flux;
  const auto scalar = [](const ExactPhase& p) { return BasisMapOperator::scalar(2, p); };
  const BasisMapOperator one = BasisMapOperator::identity(2);
  RelationReport report;
  add_check(report, "p1p2p1^-1p2^-1 = e^{iθ}", commutator(rep.p1, rep.p2), scalar(ExactPhase::theta(1)), flux);
  add_check(report, "q1q2q1^-1q2^-1 = e^{-iθ}", commutator(rep.q1, rep.q2), scalar(ExactPhase::theta(-1)), flux);
  add_check(report, "p1q1p1^-1q1^-1 = 1", commutator(rep.p1, rep.q1), one, flux);
  add_check(report, "p1q2p1^-1q2^-1 = 1", commutator(rep.p1, rep.q2), one, flux);
  add_check(report, "p2q1p2^-1q1^-1 = 1", commutator(rep.p2, rep.q1), one, flux);
  add_check(report, "p2q2p2^-1q2^-1 = 1", commutator(rep.p2, rep.q2), one, flux);
  const BasisMapOperator zinv = rep.zeta.inverse();
  add_check(report, "ζp1ζ^-1 = p2", rep.zeta * rep.p1 * zinv, rep.p2, flux);
  add_check(report, "ζp2ζ^-1 = p1^-1", rep.zeta * rep.p2 * zinv, rep.p1.inverse(), flux);
  add_check(report, "ζq1ζ^-1 = q2", rep.zeta * rep.q1 * zinv, rep.q2, flux);
  add_check(report, "ζq2ζ^-1 = q1^-1", rep.zeta * rep.q2 * zinv, rep.q1.inverse(), flux);
  add_check(report, "ζ^4 = 1", rep.zeta.pow(4), one, flux);
  return report;
}

RelationReport verify_relations(const DistinguishedRep& rep) {
  RelationReport report;
  add_check(report, "U(p1)U(p2)U(p1)^-1U(p2)^-1 = e^{iθ}", commutator(rep.p1, rep.p2),
            BasisMapOperator::scalar(1, ExactPhase::theta(1)), rep.flux);
  return report;
}

RelationReport gauge_check(const Flux& flux, std::int64_t gauge_units) {
  const WavefunctionRep canonical = build_wavefunction(flux, 0);
  const WavefunctionRep gauged = build_wavefunction(flux, gauge_units);
  const BasisMapOperator s = gauge_intertwiner(gauge_units);
  RelationReport report;
  for (Generator g : {Generator::p1, Generator::p2, Generator::q1, Generator::q2}) {
    add_check(report, std::string("W(") + to_string(g) + ")S = SW'(" + to_string(g) + ")", canonical.get(g) * s,
              s * gauged.get(g), flux);
  }
  return report;
}

std::optional<Site2> intertwiner_rotation_defect(const Flux& flux, std::int64_t gauge_units) {
  const BasisMapOperator s = gauge_intertwiner(gauge_units);
  const BasisMapOperator zeta = build_wavefunction(flux, 0).zeta;
  return find_difference(s * zeta, zeta * s, flux);
}

BasisMapOperator realize(const Monomial& m, const WavefunctionRep& rep) {
  const Exponents& e = m.exponents;
  return rep.p1.pow(e.p1) * rep.p2.pow(e.p2) * rep.q1.pow(e.q1) * rep.q2.pow(e.q2) *
         BasisMapOperator::scalar(2, m.phase);
}

CommutantReport commutant_monomial_check(const Flux& flux, std::int64_t box) {
  if (flux.is_rational()) {
    throw Error(Errc::rational_flux_unsupported,
                "the commutant scan relies on exp(i j theta) != 1 for j != 0; flux " + flux.to_string() +
                    " is rational");
  }
  if (box < 0) throw Error(Errc::invalid_parameters, "exponent box must be non-negative");
  const WavefunctionRep rep = build_wavefunction(flux, 0);
  auto powers = [&](const BasisMapOperator& op) {
    std::vector<BasisMapOperator> out;
    for (std::int64_t n = -box; n <= box; ++n) out.push_back(op.pow(n));
    return out;
  };
  const auto p1s = powers(rep.p1), p2s = powers(rep.p2), q1s = powers(rep.q1), q2s = powers(rep.q2);

  CommutantReport report;
  report.box = box;
  const std::size_t span = static_cast<std::size_t>(2 * box + 1);
  for (std::size_t a = 0; a < span; ++a)
    for (std::size_t b = 0; b < span; ++b) {
      const BasisMapOperator pw = p1s[a] * p2s[b];
      for (std::size_t c = 0; c < span; ++c)
        for (std::size_t d = 0; d < span; ++d) {
          const BasisMapOperator word = pw * q1s[c] * q2s[d];
          const Exponents e{static_cast<std::int64_t>(a) - box, static_cast<std::int64_t>(b) - box,
                            static_cast<std::int64_t>(c) - box, static_cast<std::int64_t>(d) - box};
          const bool commutes =
              equal_at(word * rep.p1, rep.p1 * word, flux) && equal_at(word * rep.p2, rep.p2 * word, flux);
          ++report.words_checked;
          if (commutes) report.commuting.push_back(e);
          const bool q_word = e.p1 == 0 && e.p2 == 0;
          if (commutes != q_word) report.mismatches.push_back(e);
        }
    }
  return report;
}

std::size_t Window::size() const {
  std::size_t n = static_cast<std::size_t>(extent(0));
  if (dimension == 2) n *= static_cast<std::size_t>(extent(1));
  return n;
}

bool Window::contains(Site2 m) const {
  if (m[0] < lo[0] || m[0] > hi[0]) return false;
  if (dimension == 1) return m[1] == 0;
  return m[1] >= lo[1] && m[1] <= hi[1];
}

std::size_t Window::index(Site2 m) const {
  const auto i0 = static_cast<std::size_t>(m[0] - lo[0]);
  if (dimension == 1) return i0;
  return i0 * static_cast<std::size_t>(extent(1)) + static_cast<std::size_t>(m[1] - lo[1]);
}

Site2 Window::site(std::size_t index) const {
  if (dimension == 1) return {lo[0] + static_cast<std::int64_t>(index), 0};
  const auto n1 = static_cast<std::size_t>(extent(1));
  return {lo[0] + static_cast<std::int64_t>(index / n1), lo[1] + static_cast<std::int64_t>(index % n1)};
}

namespace {

void require_valid_window(const Window& window, int dimension) {
  if (window.dimension != dimension) throw Error(Errc::invalid_parameters, "window dimension mismatch");
  for (int axis = 0; axis < dimension; ++axis) {
    if (window.extent(axis) <= 0) throw Error(Errc::invalid_parameters, "empty truncation window");
  }
}

// Wrapping sites modulo the window must be consistent with the operator.
void require_periodic(const BasisMapOperator& op, const Window& window, const Flux& flux, double phi) {
  if (flux.is_irrational()) {
    throw Error(Errc::incompatible_periodicity, "periodic truncation needs a rational flux");
  }
  const int dim = op.dimension();
  const auto& m = op.site_map().matrix;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (m[j][i] != 0 && window.extent(i) % window.extent(j) != 0) {
        throw Error(Errc::incompatible_periodicity, "site map mixes axes of unequal period");
      }
    }
  }
  const PhaseForm& form = op.phase_form();
  for (std::size_t idx = 0; idx < window.size(); ++idx) {
    const Site2 s = window.site(idx);
    for (int axis = 0; axis < dim; ++axis) {
      Site2 t = s;
      t[axis] += window.extent(axis);
      const ExactPhase delta = form.at(t) - form.at(s);
      const bool theta_ok = is_identity({delta.a(), delta.b(), 0}, flux);
      const bool phi_ok = delta.c() == 0 || phi == 0.0;
      if (!theta_ok || !phi_ok) {
        throw Error(Errc::incompatible_periodicity,
                    "phase " + describe(form) + " is not periodic over a window of extent " +
                        std::to_string(window.extent(axis)) + " at flux " + flux.to_string());
      }
    }
  }
}

}  // namespace

TruncatedOperator truncate(const BasisMapOperator& op, const Window& window, Boundary boundary, const Flux& flux,
                           double phi) {
  require_valid_window(window, op.dimension());
  if (boundary == Boundary::periodic) require_periodic(op, window, flux, phi);

  const auto n = static_cast<Eigen::Index>(window.size());
  TruncatedOperator out{window, boundary, Eigen::MatrixXcd::Zero(n, n)};
  for (std::size_t col = 0; col < window.size(); ++col) {
    const Site2 m = window.site(col);
    auto image = op.apply(m);
    if (boundary == Boundary::periodic) {
      for (int axis = 0; axis < op.dimension(); ++axis) {
        image.site[axis] = window.lo[axis] + floor_mod(image.site[axis] - window.lo[axis], window.extent(axis));
      }
    } else if (!window.contains(image.site)) {
      continue;
    }
    out.matrix(static_cast<Eigen::Index>(window.index(image.site)), static_cast<Eigen::Index>(col)) +=
        evaluate(image.phase, flux, phi);
  }
  return out;
}

TruncatedOperator truncate(const AlgebraElement& x, const WavefunctionRep& rep, const Window& window,
                           Boundary boundary, double phi) {
  require_valid_window(window, 2);
  const auto n = static_cast<Eigen::Index>(window.size());
  TruncatedOperator out{window, boundary, Eigen::MatrixXcd::Zero(n, n)};
  for (const auto& [m, c] : x.terms()) {
    out.matrix += c * truncate(realize(m, rep), window, boundary, rep.flux, phi).matrix;
  }
  return out;
}

}  // namespace peierls
