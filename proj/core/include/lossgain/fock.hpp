#pragma once

/// Truncated two-mode Fock backend for spectra.  Operators are compressed
/// exactly: every monomial in mode operators gets its closed-form matrix
/// elements in the number basis, so the assembled matrix is the true
/// compression P H P of the operator to the truncated space and Hermitian
/// spectra converge variationally from above.  The exact PhaseOperator
/// algebra, not this backend, carries the operator-identity checks;
/// truncation breaks canonical commutators at the basis edge.

#include <cstddef>
#include <vector>

#include "lossgain/matrix.hpp"
#include "lossgain/phase_operator.hpp"

namespace lossgain {

struct FockOperator {
  std::size_t n_max = 0;  // per-mode truncation; basis dimension (n_max+1)^2
  DenseMatrix matrix;
};

/// Exact compression of a degree-<=2 operator to the truncated two-mode basis.
FockOperator fock_matrix(const PhaseOperator& op, std::size_t n_max);

struct SpectrumLevel {
  double energy = 0.0;  // cluster mean
  int degeneracy = 0;
};

struct Spectrum {
  std::vector<double> eigenvalues;     // lowest k, ascending
  std::vector<SpectrumLevel> levels;   // clusters of adjacent eigenvalues
  bool truncation_warning = false;     // requested levels left the trusted window n <= n_max/3
};

/// Lowest k eigenvalues of a Hermitian Fock operator with degeneracy
/// clustering: adjacent eigenvalues closer than level_tol are grouped into
/// one level.  Callers working with a Landau-type spectrum pass
/// level_tol = 1e-6 |omega|.  Throws NotHermitian for non-Hermitian input.
Spectrum spectrum(const FockOperator& h, std::size_t k, double level_tol);

/// Number of eigenvalues within +-window of a target energy.
int count_within(const std::vector<double>& eigenvalues, double target, double window);

/// Single-mode exact matrix elements in the number basis (dimension n_max+1):
/// x, p, x^2, p^2 and the symmetrized product (xp + px)/2.
DenseMatrix mode_x(std::size_t n_max);
DenseMatrix mode_p(std::size_t n_max);
DenseMatrix mode_x2(std::size_t n_max);
DenseMatrix mode_p2(std::size_t n_max);
DenseMatrix mode_xp_sym(std::size_t n_max);

}  // namespace lossgain
