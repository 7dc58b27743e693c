#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "peierls/flux.hpp"

namespace peierls {

// q x q Bloch matrix of the Harper operator at flux nu/q and magnetic momenta
// (k1, k2). Needs 0 <= nu < q and gcd(nu, q) = 1.
Eigen::MatrixXcd bloch_matrix(std::int64_t nu, std::int64_t q, double k1, double k2);

// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SpectrumEstimate {
  Flux flux = Flux::rational(0, 1);
  int k_grid = 0;
  std::vector<double> samples;          // sorted, k_grid^2 * q values
  std::vector<Interval> bands;          // range of the i-th eigenvalue over the grid
  std::vector<Interval> band_intervals; // bands merged into disjoint sorted intervals
  double grid_spacing = 0.0;            // largest gap between samples inside one band
};

// Bloch eigenvalues on the uniform grid k = 2 pi i / k_grid in both momenta.
// Rational flux, k_grid >= 4.
SpectrumEstimate spectrum(const Flux& flux, int k_grid);

struct ButterflyRow {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double energy = 0.0;
  friend bool operator==(const ButterflyRow&, const ButterflyRow&) = default;
};

struct ButterflyDataset {
  int q_max = 0;
  int k_grid = 0;
  std::vector<ButterflyRow> rows;  // by (num/den, energy)
  friend bool operator==(const ButterflyDataset&, const ButterflyDataset&) = default;
};

// Reduced fractions nu/q in [0, 1) with q <= q_max, ascending.
std::vector<Fraction> farey_fractions(int q_max);

// threads == 0 picks the hardware concurrency. Output does not depend on it.
ButterflyDataset butterfly(int q_max, int k_grid, unsigned threads = 1);

struct SymmetryCheck {
  double flux_mirror_error = 0.0;    // Phi -> 1 - Phi
  double energy_mirror_error = 0.0;  // E -> -E
  std::size_t flux_values = 0;
  bool holds(double tol = 1e-9) const { return flux_mirror_error <= tol && energy_mirror_error <= tol; }
};

SymmetryCheck check_symmetry(const ButterflyDataset& data);

// Symmetric Hausdorff distance between two finite sets of reals.
double hausdorff_distance(std::span<const double> a, std::span<const double> b);

struct ApproximantSeries {
  std::vector<Fraction> convergents;
  std::vector<SpectrumEstimate> spectra;
  std::vector<double> distances;  // between consecutive sample sets
};

ApproximantSeries approximant_spectra(const Flux& flux, int depth, int k_grid);

struct ConsistencyCheck {
  std::int64_t side = 0;  // periodic window is side x side
  double max_error = 0.0;
  std::vector<double> truncated;
  std::vector<double> bloch;
};

// Eigenvalues of the periodic truncation of the representation-level Harper
// operator against Bloch eigenvalues on the matching momentum grid.
ConsistencyCheck representation_consistency(const Flux& flux, int windows = 1);

}  // namespace peierls
