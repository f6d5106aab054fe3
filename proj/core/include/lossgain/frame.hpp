#pragma once

/// Region classification by the signature of M and the canonical frame that
/// hides the loss-gain terms: M is diagonalized by an orthogonal O, scaled by
/// S = diag(sqrt|lambda_i|) so that S^{-1} O^T M O S^{-1} = eta, a diagonal
/// sign matrix.  In the frame coordinates calX = S^{-1} O^T X the equations
/// of motion carry no loss-gain terms: (eta calR)_ii = 0.

#include <span>
#include <utility>
#include <vector>

#include "lossgain/matrix.hpp"
#include "lossgain/system.hpp"

namespace lossgain {

struct RegionReport {
  std::vector<double> eigenvalues;  // descending
  std::vector<int> signs;           // +-1 per eigenvalue
  int region_index = 0;             // 1..N+1: number of negative eigenvalues + 1
  DenseMatrix eta;                  // diag(signs)
};

/// Throws SingularM when any eigenvalue sits within the singularity cut; the
/// boundaries between regions are outside the formulation.
RegionReport classify(const DenseMatrix& big_m, double det_tol_rel = tol::kDetRel);

struct CanonicalFrame {
  DenseMatrix o_mat;  // orthogonal diagonalizer, det +1
  DenseMatrix s_mat;  // diag(sqrt|lambda_i|)
  DenseMatrix eta;
  DenseMatrix r_cal;  // [O^T R O]_ij sqrt(|l_i||l_j|), antisymmetric
  std::vector<double> eigenvalues;
  int region_index = 0;
};

/// Builds the frame from M and R evaluated at the given configuration point.
/// The diagonalizer's sign convention is inherited from eig_sym with one
/// deterministic column flip when needed to reach det(O) = +1, which keeps
/// the two-dimensional rotation-angle parametrization reproducible.
CanonicalFrame build_frame(const SystemSpec& spec, std::span<const double> at);
CanonicalFrame build_frame_from(const DenseMatrix& big_m, const DenseMatrix& r_mat);

/// calX = S^{-1} O^T x, calP = S O^T p.
std::pair<std::vector<double>, std::vector<double>> to_frame(const CanonicalFrame& f,
                                                             std::span<const double> x,
                                                             std::span<const double> p);
std::pair<std::vector<double>, std::vector<double>> from_frame(const CanonicalFrame& f,
                                                               std::span<const double> cx,
                                                               std::span<const double> cp);

/// Same maps applied to (position, velocity) pairs: velocities transform like
/// positions under the linear point transformation.
std::vector<double> position_to_frame(const CanonicalFrame& f, std::span<const double> x);
std::vector<double> position_from_frame(const CanonicalFrame& f, std::span<const double> cx);

}  // namespace lossgain
