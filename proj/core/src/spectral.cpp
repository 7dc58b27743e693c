#include "peierls/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "peierls/algebra.hpp"
#include "peierls/errors.hpp"
#include "peierls/representations.hpp"

namespace peierls {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<std::vector<double>> bloch_levels(std::int64_t nu, std::int64_t q, int k_grid) {
  // levels[i] holds the i-th eigenvalue over the whole grid
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(q));
  for (auto& l : levels) l.reserve(static_cast<std::size_t>(k_grid) * k_grid);
  for (int i = 0; i < k_grid; ++i) {
    const double k1 = two_pi * i / k_grid;
    for (int j = 0; j < k_grid; ++j) {
      const double k2 = two_pi * j / k_grid;
      const auto ev = hermitian_eigenvalues(bloch_matrix(nu, q, k1, k2));
      for (std::size_t b = 0; b < ev.size(); ++b) levels[b].push_back(ev[b]);
    }
  }
  return levels;
}

}  // namespace

Eigen::MatrixXcd bloch_matrix(std::int64_t nu, std::int64_t q, double k1, double k2) {
  if (q < 1 || nu < 0 || nu >= q || std::gcd(nu, q) != 1) {
    throw Error(Errc::non_reduced_fraction,
                std::to_string(nu) + "/" + std::to_string(q) + " is not a reduced fraction in [0,1)");
  }
  if (q == 1) {
    Eigen::MatrixXcd h(1, 1);
    h(0, 0) = 2.0 * std::cos(k1) + 2.0 * std::cos(k2);
    return h;
  }
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(q, q);
  for (std::int64_t m = 0; m < q; ++m) {
    h(m, m) = 2.0 * std::cos(k2 + two_pi * static_cast<double>(nu * m) / static_cast<double>(q));
  }
  for (std::int64_t m = 0; m + 1 < q; ++m) {
    h(m, m + 1) += 1.0;
    h(m + 1, m) += 1.0;
  }
  const double qk = static_cast<double>(q) * k1;
  h(0, q - 1) += std::polar(1.0, -qk);
  h(q - 1, 0) += std::polar(1.0, qk);
  return h;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  if (h.rows() == 1) return {h(0, 0).real()};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumEstimate spectrum(const Flux& flux, int k_grid) {
  if (!flux.is_rational()) {
    throw Error(Errc::invalid_parameters, "Bloch spectra need a rational flux; use approximants for " +
                                              flux.to_string());
  }
  if (k_grid < 4) throw Error(Errc::invalid_parameters, "k_grid must be at least 4");

  SpectrumEstimate out;
  out.flux = flux;
  out.k_grid = k_grid;
  auto levels = bloch_levels(flux.numerator(), flux.denominator(), k_grid);
  for (auto& l : levels) {
    std::sort(l.begin(), l.end());
    out.bands.push_back({l.front(), l.back()});
    for (std::size_t i = 1; i < l.size(); ++i) out.grid_spacing = std::max(out.grid_spacing, l[i] - l[i - 1]);
    out.samples.insert(out.samples.end(), l.begin(), l.end());
  }
  std::sort(out.samples.begin(), out.samples.end());

  std::vector<Interval> sorted = out.bands;
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  const double tol = std::max(10.0 * out.grid_spacing, 1e-12);
  for (const Interval& b : sorted) {
    if (!out.band_intervals.empty() && b.lo - out.band_intervals.back().hi <= tol) {
      out.band_intervals.back().hi = std::max(out.band_intervals.back().hi, b.hi);
    } else {
      out.band_intervals.push_back(b);
    }
  }
  return out;
}

std::vector<Fraction> farey_fractions(int q_max) {
  if (q_max < 1) throw Error(Errc::invalid_parameters, "q_max must be positive");
  std::vector<Fraction> out;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    for (std::int64_t nu = 0; nu < q; ++nu) {
      if (std::gcd(nu, q) == 1) out.push_back({nu, q});
    }
  }
  std::sort(out.begin(), out.end(), [](const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; });
  return out;
}

ButterflyDataset butterfly(int q_max, int k_grid, unsigned threads) {
  if (k_grid < 4) throw Error(Errc::invalid_parameters, "k_grid must be at least 4");
  const std::vector<Fraction> fluxes = farey_fractions(q_max);
  std::vector<std::vector<double>> samples(fluxes.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < fluxes.size(); i = next++) {
      samples[i] = spectrum(Flux::rational(fluxes[i].num, fluxes[i].den), k_grid).samples;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, fluxes.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ButterflyDataset data;
  data.q_max = q_max;
  data.k_grid = k_grid;
  std::size_t total = 0;
  for (const auto& s : samples) total += s.size();
  data.rows.reserve(total);
  for (std::size_t i = 0; i < fluxes.size(); ++i) {
    for (double e : samples[i]) data.rows.push_back({fluxes[i].num, fluxes[i].den, e});
  }
  return data;
}

SymmetryCheck check_symmetry(const ButterflyDataset& data) {
  // group rows by flux; rows are already sorted within each flux
  std::vector<std::pair<Fraction, std::vector<double>>> groups;
  for (const ButterflyRow& r : data.rows) {
    if (groups.empty() || groups.back().first != Fraction{r.num, r.den}) groups.push_back({{r.num, r.den}, {}});
    groups.back().second.push_back(r.energy);
  }

  SymmetryCheck out;
  out.flux_values = groups.size();
  auto find = [&](Fraction f) -> const std::vector<double>* {
    for (const auto& [g, e] : groups) {
      if (g == f) return &e;
    }
    return nullptr;
  };
  for (const auto& [f, e] : groups) {
    const std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i) {
      out.energy_mirror_error = std::max(out.energy_mirror_error, std::abs(e[i] + e[n - 1 - i]));
    }
    const Fraction mirror = f.num == 0 ? f : Fraction{f.den - f.num, f.den};
    const std::vector<double>* m = find(mirror);
    if (m == nullptr || m->size() != n) {
      out.flux_mirror_error = std::numeric_limits<double>::infinity();
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) out.flux_mirror_error = std::max(out.flux_mirror_error, std::abs(e[i] - (*m)[i]));
  }
  return out;
}

double hausdorff_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  auto directed = [](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double x : from) {
      auto it = std::lower_bound(to.begin(), to.end(), x);
      double best = std::numeric_limits<double>::infinity();
      if (it != to.end()) best = *it - x;
      if (it != to.begin()) best = std::min(best, x - *std::prev(it));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(sa, sb), directed(sb, sa));
}

ApproximantSeries approximant_spectra(const Flux& flux, int depth, int k_grid) {
  if (!flux.is_irrational()) {
    throw Error(Errc::invalid_parameters, "approximant spectra need an irrational flux");
  }
  ApproximantSeries out;
  out.convergents = convergents(flux.continued_fraction(), depth);
  for (const Fraction& c : out.convergents) {
    out.spectra.push_back(spectrum(Flux::rational(c.num, c.den), k_grid));
    if (out.spectra.size() > 1) {
      out.distances.push_back(
          hausdorff_distance(out.spectra[out.spectra.size() - 2].samples, out.spectra.back().samples));
    }
  }
  return out;
}

ConsistencyCheck representation_consistency(const Flux& flux, int windows) {
  if (!flux.is_rational()) throw Error(Errc::invalid_parameters, "consistency check needs a rational flux");
  if (windows < 1) throw Error(Errc::invalid_parameters, "window multiple must be positive");
  const std::int64_t q = flux.denominator();
  // The half-angle phases of W are periodic over 2q sites.
  const std::int64_t side = 2 * q * windows;

  ConsistencyCheck out;
  out.side = side;
  const WavefunctionRep rep = build_wavefunction(flux, 0);
  const TruncatedOperator h =
      truncate(harper_element(), rep, Window::square(0, side - 1), Boundary::periodic);
  Eigen::MatrixXcd sym = 0.5 * (h.matrix + h.matrix.adjoint());
  out.truncated = hermitian_eigenvalues(sym);

  for (std::int64_t j = 0; j < side / q; ++j) {
    for (std::int64_t l = 0; l < side; ++l) {
      const auto ev = hermitian_eigenvalues(bloch_matrix(flux.numerator(), q, two_pi * static_cast<double>(j) / side,
                                                         two_pi * static_cast<double>(l) / side));
      out.bloch.insert(out.bloch.end(), ev.begin(), ev.end());
    }
  }
  std::sort(out.bloch.begin(), out.bloch.end());
  if (out.bloch.size() != out.truncated.size()) {
    out.max_error = std::numeric_limits<double>::infinity();
    return out;
  }
  for (std::size_t i = 0; i < out.bloch.size(); ++i) {
    out.max_error = std::max(out.max_error, std::abs(out.bloch[i] - out.truncated[i]));
  }
  return out;
}

}  // namespace peierls
