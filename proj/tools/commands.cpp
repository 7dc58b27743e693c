#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "peierls/algebra.hpp"
#include "peierls/errors.hpp"
#include "peierls/landau.hpp"
#include "peierls/phase.hpp"
#include "peierls/representations.hpp"
#include "peierls/spectral.hpp"

namespace peierls::cli {

namespace {

std::string fmt(double v, const char* pattern = "%.12g") {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string flux_value(const Flux& flux) {
  return flux.is_rational() ? flux.to_string() : fmt(flux.value(), "%.10f");
}

CommandResult from_report(const RelationReport& report, Format format, std::string header = {}) {
  CommandResult out;
  if (format == Format::json) {
    out.output = report.to_json().dump(2) + "\n";
  } else {
    out.output = header + report.to_text();
  }
  out.exit_code = report.all_pass() ? 0 : 1;
  return out;
}

nlohmann::json intervals_json(const std::vector<Interval>& xs) {
  auto arr = nlohmann::json::array();
  for (const Interval& i : xs) arr.push_back({i.lo, i.hi});
  return arr;
}

}  // namespace

CommandResult classify(const Flux& flux, Format format) {
  const Classification c = peierls::classify(flux);
  CommandResult out;
  if (format == Format::json) {
    nlohmann::json j{{"classification", c.to_string()}, {"flux", flux_value(flux)}, {"value", flux.value()}};
    if (flux.is_rational()) j["fraction"] = {flux.numerator(), flux.denominator()};
    out.output = j.dump(2) + "\n";
  } else {
    out.output = "classification: " + c.to_string() + "\nflux: " + flux_value(flux) + "\n";
  }
  return out;
}

CommandResult verify(const Flux& flux, std::int64_t gauge, bool corrupt, Format format) {
  WavefunctionRep rep = build_wavefunction(flux, gauge);
  if (corrupt) {
    // A constant phase would cancel in every commutator; make it site dependent.
    PhaseForm extra;
    extra.theta_halves.linear[1] = 1;
    rep.p1 = BasisMapOperator::diagonal(2, extra) * rep.p1;
  }
  RelationReport report = verify_relations(rep);
  if (gauge == 0 && !corrupt) report.append(verify_relations(build_distinguished(flux)));
  return from_report(report, format,
                     "flux " + flux_value(flux) + ", gauge units " + std::to_string(gauge) +
                         (corrupt ? ", W(p1) corrupted" : "") + "\n");
}

CommandResult invariant(const Flux& flux, int max_j, Format format) {
  const auto basis = derive_invariant_basis(max_j, flux);
  CommandResult out;
  if (format == Format::json) {
    auto arr = nlohmann::json::array();
    for (const auto& b : basis) arr.push_back(render(b));
    out.output = nlohmann::json{{"flux", flux_value(flux)}, {"max_j", max_j}, {"basis", arr}}.dump(2) + "\n";
    return out;
  }
  out.output = "flux " + flux_value(flux) + "\n";
  const std::size_t axis = static_cast<std::size_t>(max_j) + 1;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out.output += (j < axis ? "j=" + std::to_string(j) : "off-axis " + std::to_string(j - axis + 1)) + ": " +
                  render(basis[j]) + "\n";
  }
  const bool harper = basis.size() > 1 && structurally_equal(basis[1], harper_element(), flux);
  if (basis.size() > 1) out.output += std::string("j=1 is the Harper element: ") + (harper ? "yes" : "no") + "\n";
  out.exit_code = basis.size() > 1 && !harper ? 1 : 0;
  return out;
}

namespace {

struct SpectrumChecks {
  double symmetry_error = 0.0;
  bool in_range = true;
  bool band_count_ok = true;
  bool ok() const { return symmetry_error <= 1e-9 && in_range && band_count_ok; }
};

SpectrumChecks check(const SpectrumEstimate& s) {
  SpectrumChecks c;
  const auto& e = s.samples;
  for (std::size_t i = 0; i < e.size(); ++i) {
    c.symmetry_error = std::max(c.symmetry_error, std::abs(e[i] + e[e.size() - 1 - i]));
    if (std::abs(e[i]) > 4.0 + 1e-12) c.in_range = false;
  }
  c.band_count_ok = static_cast<std::int64_t>(s.band_intervals.size()) <= s.flux.denominator();
  return c;
}

void describe_spectrum(std::string& out, const SpectrumEstimate& s) {
  out += "flux " + s.flux.to_string() + " k_grid " + std::to_string(s.k_grid) + " samples " +
         std::to_string(s.samples.size()) + "\n";
  for (std::size_t i = 0; i < s.band_intervals.size(); ++i) {
    out += "  band " + std::to_string(i + 1) + ": [" + fmt(s.band_intervals[i].lo) + ", " +
           fmt(s.band_intervals[i].hi) + "]\n";
  }
}

nlohmann::json spectrum_json(const SpectrumEstimate& s) {
  return {{"flux", {s.flux.numerator(), s.flux.denominator()}},
          {"k_grid", s.k_grid},
          {"samples", s.samples.size()},
          {"bands", intervals_json(s.bands)},
          {"band_intervals", intervals_json(s.band_intervals)}};
}

}  // namespace

CommandResult spectrum(const Flux& flux, int k_grid, int depth, Format format) {
  CommandResult out;
  if (flux.is_rational()) {
    const SpectrumEstimate s = peierls::spectrum(flux, k_grid);
    const SpectrumChecks c = check(s);
    if (format == Format::json) {
      nlohmann::json j = spectrum_json(s);
      j["symmetry_error"] = c.symmetry_error;
      j["checks_pass"] = c.ok();
      out.output = j.dump(2) + "\n";
    } else {
      describe_spectrum(out.output, s);
      out.output += "symmetry under E -> -E: max error " + fmt(c.symmetry_error, "%.3e") + "\n";
      out.output += std::string("checks: ") + (c.ok() ? "PASS" : "FAIL") + "\n";
    }
    out.exit_code = c.ok() ? 0 : 1;
    return out;
  }

  const int known = static_cast<int>(flux.continued_fraction().size()) - 1;
  if (depth > known) {
    out.warnings += "warning: flux " + flux_value(flux) + " has only " + std::to_string(known) +
                    " partial quotients; depth reduced from " + std::to_string(depth) + "\n";
    depth = known;
  }
  const ApproximantSeries series = approximant_spectra(flux, depth, k_grid);
  bool ok = true;
  for (const auto& s : series.spectra) ok = ok && check(s).ok();
  if (format == Format::json) {
    auto spectra = nlohmann::json::array();
    for (const auto& s : series.spectra) spectra.push_back(spectrum_json(s));
    out.output = nlohmann::json{{"flux", flux_value(flux)},
                                {"approximants", spectra},
                                {"hausdorff_distances", series.distances},
                                {"checks_pass", ok}}
                     .dump(2) +
                 "\n";
  } else {
    out.output = "flux " + flux_value(flux) + ": spectra at " + std::to_string(series.spectra.size()) +
                 " continued-fraction approximants\n";
    for (const auto& s : series.spectra) describe_spectrum(out.output, s);
    for (std::size_t i = 0; i < series.distances.size(); ++i) {
      out.output += "hausdorff " + series.spectra[i].flux.to_string() + " -> " +
                    series.spectra[i + 1].flux.to_string() + ": " + fmt(series.distances[i], "%.6g") + "\n";
    }
    out.output += std::string("checks: ") + (ok ? "PASS" : "FAIL") + "\n";
  }
  out.exit_code = ok ? 0 : 1;
  return out;
}

CommandResult butterfly(int q_max, int k_grid, unsigned threads, bool check_symmetry_flag, DatasetFormat format,
                        const std::string& out_path) {
  const ButterflyDataset data = peierls::butterfly(q_max, k_grid, threads);
  CommandResult out;
  if (out_path.empty()) {
    std::ostringstream os;
    write_dataset(os, data, format);
    out.output = os.str();
  } else {
    write_dataset(out_path, data, format);
  }
  if (check_symmetry_flag) {
    const SymmetryCheck c = check_symmetry(data);
    out.warnings += "symmetry check over " + std::to_string(c.flux_values) + " flux values: Phi -> 1-Phi error " +
                    fmt(c.flux_mirror_error, "%.3e") + ", E -> -E error " + fmt(c.energy_mirror_error, "%.3e") +
                    (c.holds() ? " PASS\n" : " FAIL\n");
    out.exit_code = c.holds() ? 0 : 1;
  }
  return out;
}

CommandResult landau(double r, double m, int n_max, Format format) {
  const LandauOperators ops = build_landau(r, m, n_max);
  const int levels = std::min(8, n_max / 2);
  RelationReport report = bracket_report(ops);
  report.append(angular_identity_report(ops));
  report.append(spectrum_report(ops, levels));
  report.append(lorentz_report(ops));
  CommandResult out = from_report(report, format,
                                  "r " + fmt(r) + ", m " + fmt(m) + ", n_max " + std::to_string(n_max) + ", s " +
                                      fmt(ops.s) + "\n");
  if (levels < 8) {
    out.warnings += "warning: n_max = " + std::to_string(n_max) + " is a small truncation; only " +
                    std::to_string(levels) + " levels checked\n";
  }
  return out;
}

CommandResult gauge_check(const Flux& flux, std::int64_t gauge, std::uint64_t seed, Format format) {
  RelationReport report = peierls::gauge_check(flux, gauge);

  // numerical spot check of S^-1 W(g) S = W'(g) at random sites and a random phi
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-50, 50);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double phi = angle(rng);
  const WavefunctionRep canonical = build_wavefunction(flux, 0);
  const WavefunctionRep gauged = build_wavefunction(flux, gauge);
  const BasisMapOperator s = gauge_intertwiner(gauge);
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const Site2 m{coord(rng), coord(rng)};
    for (Generator g : {Generator::p1, Generator::p2, Generator::q1, Generator::q2}) {
      const auto lhs = (s.inverse() * canonical.get(g) * s).apply(m);
      const auto rhs = gauged.get(g).apply(m);
      const double d = lhs.site == rhs.site
                           ? std::abs(evaluate(lhs.phase, flux, phi) - evaluate(rhs.phase, flux, phi))
                           : 2.0;
      worst = std::max(worst, d);
    }
  }
  report.add("numeric spot check at 20 random sites", worst < 1e-9, "max deviation " + fmt(worst, "%.3e"));

  const auto defect = intertwiner_rotation_defect(flux, gauge);
  std::string header = "flux " + flux_value(flux) + ", intertwiner S = diag(exp i(" + describe(s.phase_form()) +
                       ")) for gauge units " + std::to_string(gauge) + "\n";
  header += "S commutes with W(zeta): ";
  header += defect ? "no, differs at (" + std::to_string((*defect)[0]) + "," + std::to_string((*defect)[1]) + ")\n"
                   : "yes\n";
  CommandResult out = from_report(report, format, header);
  if (format == Format::json) {
    nlohmann::json j{{"intertwiner_phase", describe(s.phase_form())},
                     {"commutes_with_rotation", !defect.has_value()},
                     {"relations", report.to_json()}};
    out.output = j.dump(2) + "\n";
  }
  return out;
}

}  // namespace peierls::cli
