#include "peierls/algebra.hpp"

#include <array>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>

#include "peierls/errors.hpp"

namespace peierls {

const char* to_string(Generator g) noexcept {
  switch (g) {
    case Generator::p1: return "p1";
    case Generator::p2: return "p2";
    case Generator::q1: return "q1";
    case Generator::q2: return "q2";
  }
  return "?";
}

Monomial Monomial::generator(Generator g, std::int64_t power) {
  Monomial m;
  switch (g) {
    case Generator::p1: m.exponents.p1 = power; break;
    case Generator::p2: m.exponents.p2 = power; break;
    case Generator::q1: m.exponents.q1 = power; break;
    case Generator::q2: m.exponents.q2 = power; break;
  }
  return m;
}

Monomial multiply(const Monomial& x, const Monomial& y, const Flux& flux) {
  const Exponents& a = x.exponents;
  const Exponents& b = y.exponents;
  // p2^s p1^t = e^{-i theta s t} p1^t p2^s and q2^s q1^t = e^{+i theta s t} q1^t q2^s.
  const std::int64_t swaps = -a.p2 * b.p1 + a.q2 * b.q1;
  Monomial out;
  out.exponents = {a.p1 + b.p1, a.p2 + b.p2, a.q1 + b.q1, a.q2 + b.q2};
  out.phase = reduce(x.phase + y.phase + ExactPhase::theta(swaps), flux);
  return out;
}

AlgebraElement AlgebraElement::scalar(Coefficient c) { return from(Monomial::unit(), c); }

AlgebraElement AlgebraElement::from(const Monomial& m, Coefficient c) {
  AlgebraElement e;
  e.add_term(m, c);
  return e;
}

AlgebraElement AlgebraElement::generator(Generator g, std::int64_t power) {
  return from(Monomial::generator(g, power));
}

void AlgebraElement::add_term(const Monomial& m, Coefficient c) {
  if (c == Coefficient{}) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Coefficient{}) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement operator*(AlgebraElement::Coefficient c, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [m, coeff] : a.terms_) out.add_term(m, c * coeff);
  return out;
}

AlgebraElement canonicalize(const AlgebraElement& x, const Flux& flux) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out.add_term({m.exponents, reduce(m.phase, flux)}, c);
  return out;
}

bool structurally_equal(const AlgebraElement& x, const AlgebraElement& y, const Flux& flux) {
  return canonicalize(x, flux) == canonicalize(y, flux);
}

bool numerically_equal(const AlgebraElement& x, const AlgebraElement& y, const Flux& flux, double phi,
                       double tol) {
  std::map<Exponents, AlgebraElement::Coefficient> diff;
  for (const auto& [m, c] : x.terms()) diff[m.exponents] += c * evaluate(m.phase, flux, phi);
  for (const auto& [m, c] : y.terms()) diff[m.exponents] -= c * evaluate(m.phase, flux, phi);
  for (const auto& [e, c] : diff) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const Flux& flux) {
  AlgebraElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) out.add_term(multiply(mx, my, flux), cx * cy);
  }
  return out;
}

namespace {

Monomial product(std::initializer_list<Monomial> factors, const Flux& flux) {
  Monomial acc = Monomial::unit();
  for (const auto& f : factors) acc = multiply(acc, f, flux);
  return acc;
}

Monomial adjoint(const Monomial& m, const Flux& flux) {
  const Exponents& e = m.exponents;
  Monomial out = product({Monomial::generator(Generator::q2, -e.q2), Monomial::generator(Generator::q1, -e.q1),
                          Monomial::generator(Generator::p2, -e.p2), Monomial::generator(Generator::p1, -e.p1)},
                         flux);
  out.phase = reduce(out.phase - m.phase, flux);
  return out;
}

Monomial rotate(const Monomial& m, const Flux& flux) {
  const Exponents& e = m.exponents;
  Monomial out = product({Monomial::generator(Generator::p2, e.p1), Monomial::generator(Generator::p1, -e.p2),
                          Monomial::generator(Generator::q2, e.q1), Monomial::generator(Generator::q1, -e.q2)},
                         flux);
  out.phase = reduce(out.phase + m.phase, flux);
  return out;
}

}  // namespace

AlgebraElement adjoint(const AlgebraElement& x, const Flux& flux) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out.add_term(adjoint(m, flux), std::conj(c));
  return out;
}

AlgebraElement conjugate_by_translation(const AlgebraElement& x, Generator g, const Flux& flux,
                                        std::int64_t power) {
  const Monomial left = Monomial::generator(g, power);
  const Monomial right = Monomial::generator(g, -power);
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out.add_term(multiply(multiply(left, m, flux), right, flux), c);
  return out;
}

AlgebraElement conjugate_by_zeta(const AlgebraElement& x, const Flux& flux) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out.add_term(rotate(m, flux), c);
  return out;
}

namespace {

void require_irrational(const Flux& flux, const char* what) {
  if (flux.is_rational()) {
    throw Error(Errc::rational_flux_unsupported,
                std::string(what) + " is defined for irrational flux only; the rational case (flux " +
                    flux.to_string() + ") has a larger invariant algebra and is not handled");
  }
}

bool fixed_by_translations(const Monomial& m, const Flux& flux) {
  const AlgebraElement e = AlgebraElement::from(m);
  return conjugate_by_translation(e, Generator::p1, flux) == e &&
         conjugate_by_translation(e, Generator::p2, flux) == e;
}

// Returns a phase multiple of `orbit_sum` equal to its own adjoint, if one
// exists with an exactly representable phase.
std::optional<AlgebraElement> selfadjoint_multiple(const AlgebraElement& orbit_sum, const Flux& flux) {
  const AlgebraElement adj = adjoint(orbit_sum, flux);
  if (adj == orbit_sum) return orbit_sum;
  if (adj.size() != orbit_sum.size()) return std::nullopt;

  // adj must be a uniform phase shift of orbit_sum, term by term.
  std::map<Exponents, std::pair<ExactPhase, AlgebraElement::Coefficient>> lhs;
  for (const auto& [m, c] : orbit_sum.terms()) {
    if (!lhs.emplace(m.exponents, std::pair{m.phase, c}).second) return std::nullopt;
  }
  std::optional<ExactPhase> shift;
  for (const auto& [m, c] : adj.terms()) {
    const auto it = lhs.find(m.exponents);
    if (it == lhs.end() || it->second.second != c) return std::nullopt;
    const ExactPhase d = reduce(m.phase - it->second.first, flux);
    if (shift && *shift != d) return std::nullopt;
    shift = d;
  }
  // (e^{i s/2} O)^dagger = e^{-i s/2} e^{i s} O.
  if (!shift || shift->a() % 2 != 0 || shift->b() != 0 || shift->c() % 2 != 0) return std::nullopt;
  const ExactPhase half{shift->a() / 2, 0, shift->c() / 2};
  AlgebraElement out;
  for (const auto& [m, c] : orbit_sum.terms()) out.add_term({m.exponents, reduce(m.phase + half, flux)}, c);
  if (!(adjoint(out, flux) == out)) return std::nullopt;
  return out;
}

}  // namespace

bool is_invariant(const AlgebraElement& x, const Flux& flux) {
  require_irrational(flux, "invariance");
  const AlgebraElement c = canonicalize(x, flux);
  return conjugate_by_translation(c, Generator::p1, flux) == c &&
         conjugate_by_translation(c, Generator::p2, flux) == c && conjugate_by_zeta(c, flux) == c;
}

std::vector<AlgebraElement> derive_invariant_basis(int max_j, const Flux& flux) {
  require_irrational(flux, "the invariant basis");
  if (max_j < 0) throw Error(Errc::invalid_parameters, "max_j must be non-negative");
  const std::int64_t box = max_j;

  // 1. Monomials fixed by the translations p1, p2.
  std::vector<Monomial> fixed;
  for (std::int64_t j1 = -box; j1 <= box; ++j1)
    for (std::int64_t j2 = -box; j2 <= box; ++j2)
      for (std::int64_t k1 = -box; k1 <= box; ++k1)
        for (std::int64_t k2 = -box; k2 <= box; ++k2) {
          const Monomial m{{j1, j2, k1, k2}, {}};
          if (fixed_by_translations(m, flux)) fixed.push_back(m);
        }

  // 2. Symmetrize over zeta-orbits; 3. keep orbit sums admitting a
  // self-adjoint multiple.
  struct Candidate {
    bool off_axis;
    std::int64_t radius;
    Exponents rep;
    AlgebraElement element;
  };
  std::vector<Candidate> found;
  std::set<Exponents> visited;
  for (const Monomial& m : fixed) {
    if (visited.contains(m.exponents)) continue;
    AlgebraElement orbit;
    Monomial image = m;
    for (int i = 0; i < 4; ++i) {
      visited.insert(image.exponents);
      orbit.add_term(image, 1.0);
      image = rotate(image, flux);
    }
    if (orbit.is_zero()) continue;
    // Normalize so the representative carries coefficient 1.
    for (const auto& [t, c] : orbit.terms()) {
      if (t.exponents == m.exponents) {
        orbit = (1.0 / c) * orbit;
        break;
      }
    }
    if (auto sa = selfadjoint_multiple(orbit, flux)) {
      const Exponents& e = m.exponents;
      const std::int64_t radius = std::max({std::abs(e.p1), std::abs(e.p2), std::abs(e.q1), std::abs(e.q2)});
      found.push_back({e.q1 != 0 && e.q2 != 0, radius, e, std::move(*sa)});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.off_axis != b.off_axis) return b.off_axis;
    return a.radius != b.radius ? a.radius < b.radius : a.rep < b.rep;
  });

  std::vector<AlgebraElement> basis;
  basis.reserve(found.size());
  for (auto& c : found) basis.push_back(std::move(c.element));
  return basis;
}

AlgebraElement harper_element() {
  return AlgebraElement::generator(Generator::q1, 1) + AlgebraElement::generator(Generator::q1, -1) +
         AlgebraElement::generator(Generator::q2, 1) + AlgebraElement::generator(Generator::q2, -1);
}

namespace {

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string render(const Monomial& m, AlgebraElement::Coefficient c) {
  std::string out = "(" + format_real(c.real());
  const double im = c.imag() == 0.0 ? 0.0 : c.imag();
  out += std::signbit(im) ? "-" : "+";
  out += format_real(std::abs(im)) + "i)";
  if (!m.phase.is_identity()) out += "·" + m.phase.to_string();
  const Exponents& e = m.exponents;
  out += "·p1^" + std::to_string(e.p1) + " p2^" + std::to_string(e.p2) + " q1^" + std::to_string(e.q1) +
         " q2^" + std::to_string(e.q2);
  return out;
}

std::string render(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += render(m, c);
  }
  return out;
}

}  // namespace peierls
