#pragma once

#include <complex>
#include <vector>

#include <Eigen/Sparse>

#include "peierls/report.hpp"

namespace peierls {

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

// Two truncated oscillator modes, each of Fock dimension n_max. Basis index
// n_max * nP + nQ. The P-mode carries [P1,P2] = ir, the Q-mode [Q1,Q2] = -ir.
struct LandauOperators {
  double r = 1.0;
  double m = 1.0;
  int n_max = 0;
  SparseMatrix P1, P2, Q1, Q2;
  SparseMatrix L;  // (1/2r)(Q1^2+Q2^2) - (1/2r)(P1^2+P2^2)
  SparseMatrix H;  // (1/2m)(Q1^2+Q2^2)
  double s = 0.0;  // value of (1/2r)(Q1^2+Q2^2) on the Q-mode ground state

  int dimension() const { return n_max * n_max; }
  // Both mode indices <= n_max - 2; truncation corrupts only the top state.
  bool is_interior(int index) const { return index / n_max <= n_max - 2 && index % n_max <= n_max - 2; }
};

LandauOperators build_landau(double r, double m, int n_max);

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

// Frobenius norm of x restricted to interior rows and columns.
double interior_residual(const LandauOperators& ops, const SparseMatrix& x);

// Lowest n_levels eigenvalues of H on the Q-mode. Needs n_levels <= n_max/2.
std::vector<double> hamiltonian_spectrum(const LandauOperators& ops, int n_levels);

// Multiplicity of `energy` among eigenvalues of H compressed to states whose
// Q index is interior.
int level_degeneracy(const LandauOperators& ops, double energy, double tol = 1e-8);

RelationReport bracket_report(const LandauOperators& ops, double tol = 1e-10);
RelationReport angular_identity_report(const LandauOperators& ops, double tol = 1e-10);
RelationReport lorentz_report(const LandauOperators& ops, double tol = 1e-8);
// Levels (|r|/m)(n - 1/2), n = 1..n_levels, and their degeneracy n_max.
RelationReport spectrum_report(const LandauOperators& ops, int n_levels, double tol = 1e-8);

}  // namespace peierls
