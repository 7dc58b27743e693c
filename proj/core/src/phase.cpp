#include "peierls/phase.hpp"

#include <cmath>
#include <numbers>

namespace peierls {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Appends "k·i<sym><suffix>" in the compact form used by to_string, where the
// coefficient counts halves of <sym>.
void append_half_term(std::string& out, std::int64_t halves, const char* sym) {
  if (halves == 0) return;
  if (!out.empty()) out += (halves < 0 ? "-" : "+");
  else if (halves < 0) out += "-";
  const std::int64_t mag = halves < 0 ? -halves : halves;
  if (mag % 2 == 0) {
    if (mag != 2) out += std::to_string(mag / 2);
    out += "i";
    out += sym;
  } else {
    if (mag != 1) out += std::to_string(mag);
    out += "i";
    out += sym;
    out += "/2";
  }
}

}  // namespace

std::complex<double> ExactPhase::evaluate(double theta, double phi) const {
  const double angle = static_cast<double>(a_) * theta / 2.0 + static_cast<double>(b_) * std::numbers::pi +
                       static_cast<double>(c_) * phi / 2.0;
  if (angle == 0.0) return {1.0, 0.0};
  return std::polar(1.0, angle);
}

std::string ExactPhase::to_string() const {
  if (is_identity()) return "1";
  std::string body;
  append_half_term(body, a_, "θ");
  if (b_ != 0) body += body.empty() ? "iπ" : "+iπ";
  append_half_term(body, c_, "φ");
  return "e^{" + body + "}";
}

ExactPhase reduce(const ExactPhase& p, const Flux& flux) {
  if (flux.is_irrational()) return p;
  // a*theta/2 = a*pi*nu/N; shifting a by N multiplies by exp(i pi nu).
  const std::int64_t n = flux.denominator();
  std::int64_t a = floor_mod(p.a(), 2 * n);
  std::int64_t b = p.b();
  if (a >= n) {
    a -= n;
    b += flux.numerator();
  }
  return {a, b, p.c()};
}

bool is_identity(const ExactPhase& p, const Flux& flux) { return reduce(p, flux).is_identity(); }

bool same_phase(const ExactPhase& x, const ExactPhase& y, const Flux& flux) {
  return is_identity(x - y, flux);
}

std::complex<double> evaluate(const ExactPhase& p, const Flux& flux, double phi) {
  if (flux.is_irrational()) return p.evaluate(flux.theta(), phi);
  const ExactPhase r = reduce(p, flux);
  const std::int64_t n = flux.denominator();
  // angle = pi * (a*nu + b*N) / N + c*phi/2
  const std::int64_t num = floor_mod(r.a() * flux.numerator() + r.b() * n, 2 * n);
  const double angle = std::numbers::pi * static_cast<double>(num) / static_cast<double>(n) +
                       static_cast<double>(r.c()) * phi / 2.0;
  if (angle == 0.0) return {1.0, 0.0};
  return std::polar(1.0, angle);
}

ExactPhase bicharacter(const Flux& flux, Site2 m, Site2 n) {
  return reduce(ExactPhase::theta(wedge(m, n)), flux);
}

ExactPhase cocycle(const Flux& flux, Site2 m, Site2 n) {
  return reduce(ExactPhase::theta_halves(wedge(m, n)), flux);
}

ExactPhase coboundary(std::int64_t phi_units, Site2 m, Site2 n) {
  return ExactPhase::phi(phi_units * (m[0] * n[1] + m[1] * n[0]));
}

DualCharacter mu(const Flux& flux, Site2 m) {
  return {reduce(ExactPhase::theta(-m[1]), flux), reduce(ExactPhase::theta(m[0]), flux)};
}

std::string Classification::to_string() const {
  if (kind == Kind::almost_heisenberg) return "almost_heisenberg";
  return "rational_with_kernel(" + std::to_string(kernel_index) + ")";
}

Classification classify(const Flux& flux) {
  if (flux.is_irrational()) return {Classification::Kind::almost_heisenberg, 0};
  return {Classification::Kind::rational_with_kernel, flux.denominator()};
}

}  // namespace peierls
