#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

// Brute-force solver for the self-adjoint elements of the group algebra fixed
// by conjugation with p1, p2 and the quarter turn, over monomials
// p1^j1 p2^j2 q1^k1 q2^k2 with every |exponent| <= box. Works with numbers
// only: theta is a double and phases are complex exponentials.
namespace oracle {

using Exps = std::array<int, 4>;  // j1 j2 k1 k2

struct InvariantSpace {
  std::vector<Exps> monomials;  // coordinates of the complex vectors below
  Eigen::MatrixXd basis;        // columns: real coordinates [Re c; Im c], orthonormal
};

InvariantSpace solve_invariant_space(int box, double theta);

// Real coordinates of a complex coefficient vector over `monomials`.
Eigen::VectorXd to_real(const std::vector<std::complex<double>>& c);

}  // namespace oracle

namespace oracle {

struct SpanComparison {
  int oracle_dimension = 0;
  int candidate_rank = 0;
  double max_residual = 0.0;  // distance of each candidate from the oracle space
  bool coincide() const { return oracle_dimension == candidate_rank && max_residual < 1e-9; }
};

// Candidates are given as complex coefficient vectors over space.monomials.
SpanComparison compare_span(const InvariantSpace& space, const std::vector<std::vector<std::complex<double>>>& xs);

}  // namespace oracle
