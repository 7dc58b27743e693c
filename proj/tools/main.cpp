#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "peierls/errors.hpp"

namespace {

constexpr int usage_error = 2;

struct Options {
  std::string flux;
  std::int64_t gauge = 0;
  int max_j = 2;
  int q_max = 10;
  int k_grid = 64;
  int depth = 8;
  double r = 1.0;
  double m = 1.0;
  int n_max = 30;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format = "text";
  std::string out;
  bool corrupt = false;
  bool check = false;
};

peierls::cli::Format report_format(const std::string& f) {
  if (f == "json") return peierls::cli::Format::json;
  if (f == "text") return peierls::cli::Format::text;
  throw CLI::ValidationError("--format", "expected text or json for this command");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace peierls;
  Options o;
  CLI::App app{"Magnetic translation groups on the square lattice: exact relations, Harper spectra, Landau checks"};
  app.require_subcommand(1);

  auto add_flux = [&](CLI::App* sub) { sub->add_option("--flux", o.flux, "p/q, golden, sqrt2, pi3 or a decimal")->required(); };
  auto add_format = [&](CLI::App* sub, const char* help) { sub->add_option("--format", o.format, help); };

  auto* classify = app.add_subcommand("classify", "classify the extension at a flux");
  add_flux(classify);
  add_format(classify, "text|json");

  auto* verify = app.add_subcommand("verify", "check the group relations exactly");
  add_flux(verify);
  verify->add_option("--gauge", o.gauge, "gauge phi-units");
  verify->add_flag("--corrupt", o.corrupt, "perturb W(p1) (negative control)");
  add_format(verify, "text|json");

  auto* invariant = app.add_subcommand("invariant", "derive the invariant Hamiltonians");
  add_flux(invariant);
  invariant->add_option("--max-j", o.max_j, "largest hopping range")->check(CLI::NonNegativeNumber);
  add_format(invariant, "text|json");

  auto* spectrum = app.add_subcommand("spectrum", "Harper spectrum (approximants for irrational flux)");
  add_flux(spectrum);
  spectrum->add_option("--k-grid", o.k_grid, "momentum grid per axis")->check(CLI::Range(4, 100000));
  spectrum->add_option("--depth", o.depth, "continued-fraction depth")->check(CLI::PositiveNumber);
  add_format(spectrum, "text|json");

  auto* butterfly = app.add_subcommand("butterfly", "Hofstadter butterfly dataset");
  butterfly->add_option("--q-max", o.q_max, "largest denominator")->check(CLI::PositiveNumber);
  butterfly->add_option("--k-grid", o.k_grid, "momentum grid per axis")->check(CLI::Range(4, 100000));
  butterfly->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  butterfly->add_option("--out", o.out, "output file (default stdout)");
  butterfly->add_flag("--check", o.check, "verify Phi -> 1-Phi and E -> -E symmetry");
  butterfly->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* landau = app.add_subcommand("landau", "continuum Landau checks on a truncated Fock space");
  landau->add_option("--r", o.r, "field strength r != 0");
  landau->add_option("--m", o.m, "mass > 0");
  landau->add_option("--n-max", o.n_max, "Fock dimension per mode");
  add_format(landau, "text|json");

  auto* gauge = app.add_subcommand("gauge-check", "check the gauge intertwiner");
  add_flux(gauge);
  gauge->add_option("--gauge", o.gauge, "gauge phi-units");
  gauge->add_option("--seed", o.seed, "seed for the numeric spot check");
  add_format(gauge, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage_error;
  }

  cli::CommandResult result;
  try {
    if (*butterfly) {
      if (o.format == "text") o.format = "csv";
      result = cli::butterfly(o.q_max, o.k_grid, o.threads, o.check,
                              o.format == "json" ? DatasetFormat::json : DatasetFormat::csv, o.out);
    } else if (*landau) {
      result = cli::landau(o.r, o.m, o.n_max, report_format(o.format));
    } else {
      const cli::Format fmt = report_format(o.format);
      const Flux flux = Flux::parse(o.flux);
      if (*classify) result = cli::classify(flux, fmt);
      else if (*verify) result = cli::verify(flux, o.gauge, o.corrupt, fmt);
      else if (*invariant) result = cli::invariant(flux, o.max_j, fmt);
      else if (*spectrum) result = cli::spectrum(flux, o.k_grid, o.depth, fmt);
      else result = cli::gauge_check(flux, o.gauge, o.seed, fmt);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return usage_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::flux_parse ? usage_error : 1;
  }

  std::fwrite(result.output.data(), 1, result.output.size(), stdout);
  std::cerr << result.warnings;
  return result.exit_code;
}
