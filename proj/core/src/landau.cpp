#include "peierls/landau.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Dense>

#include "peierls/errors.hpp"

namespace peierls {

namespace {

using C = std::complex<double>;

// x = (a + a^dagger)/sqrt2 and p = (a - a^dagger)/(i sqrt2) on n states.
Eigen::MatrixXcd position(int n) {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) x(k - 1, k) = x(k, k - 1) = std::sqrt(k / 2.0);
  return x;
}

Eigen::MatrixXcd momentum(int n) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    p(k - 1, k) = C(0.0, -std::sqrt(k / 2.0));
    p(k, k - 1) = C(0.0, std::sqrt(k / 2.0));
  }
  return p;
}

enum class Mode { p, q };

SparseMatrix embed(const Eigen::MatrixXcd& op, Mode mode) {
  const int n = static_cast<int>(op.rows());
  std::vector<Eigen::Triplet<C>> t;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (op(i, j) == C{}) continue;
      for (int other = 0; other < n; ++other) {
        if (mode == Mode::p) {
          t.emplace_back(i * n + other, j * n + other, op(i, j));
        } else {
          t.emplace_back(other * n + i, other * n + j, op(i, j));
        }
      }
    }
  }
  SparseMatrix out(n * n, n * n);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

std::string format_residual(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "residual %.3e", v);
  return buf;
}

void add_residual(RelationReport& report, std::string name, double residual, double tol) {
  report.add(std::move(name), residual < tol, format_residual(residual));
}

SparseMatrix identity(int dim) {
  SparseMatrix id(dim, dim);
  id.setIdentity();
  return id;
}

}  // namespace

LandauOperators build_landau(double r, double m, int n_max) {
  if (r == 0.0 || !std::isfinite(r)) throw Error(Errc::invalid_parameters, "r must be nonzero");
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(Errc::invalid_parameters, "mass must be positive");
  if (n_max < 4) throw Error(Errc::invalid_parameters, "n_max must be at least 4");

  const double scale = std::sqrt(std::abs(r));
  const double sign = r > 0 ? 1.0 : -1.0;
  const Eigen::MatrixXcd x = position(n_max), p = momentum(n_max);

  LandauOperators ops;
  ops.r = r;
  ops.m = m;
  ops.n_max = n_max;
  ops.P1 = embed(scale * x, Mode::p);
  ops.P2 = embed(sign * scale * p, Mode::p);
  ops.Q1 = embed(scale * x, Mode::q);
  ops.Q2 = embed(-sign * scale * p, Mode::q);
  const SparseMatrix q2 = ops.Q1 * ops.Q1 + ops.Q2 * ops.Q2;
  const SparseMatrix p2 = ops.P1 * ops.P1 + ops.P2 * ops.P2;
  ops.L = C(1.0 / (2.0 * r)) * q2 - C(1.0 / (2.0 * r)) * p2;
  ops.H = C(1.0 / (2.0 * m)) * q2;
  ops.s = q2.coeff(0, 0).real() / (2.0 * r);
  return ops;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  return SparseMatrix(a * b) - SparseMatrix(b * a);
}

double interior_residual(const LandauOperators& ops, const SparseMatrix& x) {
  double sum = 0.0;
  for (int k = 0; k < x.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(x, k); it; ++it) {
      if (ops.is_interior(static_cast<int>(it.row())) && ops.is_interior(static_cast<int>(it.col()))) {
        sum += std::norm(it.value());
      }
    }
  }
  return std::sqrt(sum);
}

std::vector<double> hamiltonian_spectrum(const LandauOperators& ops, int n_levels) {
  if (n_levels < 1) throw Error(Errc::invalid_parameters, "n_levels must be positive");
  if (n_levels > ops.n_max / 2) {
    throw Error(Errc::truncation_too_small, std::to_string(n_levels) + " levels need n_max >= " +
                                                std::to_string(2 * n_levels) + ", have " +
                                                std::to_string(ops.n_max));
  }
  // H acts on the Q index alone; read it off the P = 0 block.
  const int n = ops.n_max;
  Eigen::MatrixXcd block = Eigen::MatrixXcd(ops.H).topLeftCorner(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());
  ev.resize(static_cast<std::size_t>(n_levels));
  return ev;
}

int level_degeneracy(const LandauOperators& ops, double energy, double tol) {
  const int n = ops.n_max;
  std::vector<int> keep;
  for (int i = 0; i < ops.dimension(); ++i) {
    if (i % n <= n - 2) keep.push_back(i);
  }
  const Eigen::MatrixXcd full(ops.H);
  Eigen::MatrixXcd compressed(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) compressed(a, b) = full(keep[a], keep[b]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(compressed, Eigen::EigenvaluesOnly);
  int count = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()(i) - energy) < tol) ++count;
  }
  return count;
}

RelationReport bracket_report(const LandauOperators& ops, double tol) {
  const SparseMatrix id = identity(ops.dimension());
  const C ir(0.0, ops.r);
  const C i(0.0, 1.0);
  RelationReport report;
  add_residual(report, "[P1,P2] = ir", interior_residual(ops, commutator(ops.P1, ops.P2) - ir * id), tol);
  add_residual(report, "[Q1,Q2] = -ir", interior_residual(ops, commutator(ops.Q1, ops.Q2) + ir * id), tol);
  const std::pair<const char*, const SparseMatrix*> ps[] = {{"P1", &ops.P1}, {"P2", &ops.P2}};
  const std::pair<const char*, const SparseMatrix*> qs[] = {{"Q1", &ops.Q1}, {"Q2", &ops.Q2}};
  for (const auto& [pn, pm] : ps) {
    for (const auto& [qn, qm] : qs) {
      add_residual(report, std::string("[") + pn + "," + qn + "] = 0", interior_residual(ops, commutator(*pm, *qm)),
                   tol);
    }
  }
  add_residual(report, "[L,P1] = iP2", interior_residual(ops, commutator(ops.L, ops.P1) - i * ops.P2), tol);
  add_residual(report, "[L,P2] = -iP1", interior_residual(ops, commutator(ops.L, ops.P2) + i * ops.P1), tol);
  add_residual(report, "[L,Q1] = iQ2", interior_residual(ops, commutator(ops.L, ops.Q1) - i * ops.Q2), tol);
  add_residual(report, "[L,Q2] = -iQ1", interior_residual(ops, commutator(ops.L, ops.Q2) + i * ops.Q1), tol);
  return report;
}

RelationReport angular_identity_report(const LandauOperators& ops, double tol) {
  const C inv(1.0 / (2.0 * ops.r));
  const SparseMatrix q2 = ops.Q1 * ops.Q1 + ops.Q2 * ops.Q2;
  const SparseMatrix p2 = ops.P1 * ops.P1 + ops.P2 * ops.P2;
  RelationReport report;
  add_residual(report, "L - (1/2r)(Q1^2+Q2^2) + (1/2r)(P1^2+P2^2) = 0",
               interior_residual(ops, ops.L - inv * q2 + inv * p2), tol);
  char buf[64];
  std::snprintf(buf, sizeof buf, "s = %.6g", ops.s);
  report.add("s on the Q ground state is half-integral", std::abs(std::abs(ops.s) - 0.5) < tol, buf);
  return report;
}

RelationReport lorentz_report(const LandauOperators& ops, double tol) {
  const C i(0.0, 1.0);
  const C w(ops.r / ops.m);
  RelationReport report;
  add_residual(report, "i[H,Q1] = -(r/m)Q2", interior_residual(ops, i * commutator(ops.H, ops.Q1) + w * ops.Q2), tol);
  add_residual(report, "i[H,Q2] = (r/m)Q1", interior_residual(ops, i * commutator(ops.H, ops.Q2) - w * ops.Q1), tol);
  add_residual(report, "[H,L] = 0", interior_residual(ops, commutator(ops.H, ops.L)), tol);
  add_residual(report, "[H,P1] = 0", interior_residual(ops, commutator(ops.H, ops.P1)), tol);
  add_residual(report, "[H,P2] = 0", interior_residual(ops, commutator(ops.H, ops.P2)), tol);
  return report;
}

RelationReport spectrum_report(const LandauOperators& ops, int n_levels, double tol) {
  const std::vector<double> levels = hamiltonian_spectrum(ops, n_levels);
  const double w = std::abs(ops.r) / ops.m;
  RelationReport report;
  for (int n = 1; n <= n_levels; ++n) {
    const double expected = w * (n - 0.5);
    const double err = std::abs(levels[static_cast<std::size_t>(n - 1)] - expected);
    char buf[96];
    std::snprintf(buf, sizeof buf, "E = %.12g, expected %.12g", levels[static_cast<std::size_t>(n - 1)], expected);
    report.add("level " + std::to_string(n), err < tol, buf);
  }
  const int deg = level_degeneracy(ops, w * 0.5, tol);
  report.add("lowest level degeneracy = P-mode dimension", deg == ops.n_max,
             std::to_string(deg) + " of " + std::to_string(ops.n_max));
  return report;
}

}  // namespace peierls
