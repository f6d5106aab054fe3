#pragma once

/// Builders for the concrete matrix representations: the pairwise block
/// representation, its beta-modified variant with symmetric-hollow coupling,
/// the tridiagonal and uniform-off-diagonal representations (where balancing
/// is not pairwise), and the two-dimensional Landau representation.  Each
/// bundle carries the closed-form eigenvalues of M and its positivity
/// condition so numerics can be cross-checked against the formulas.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "lossgain/system.hpp"

namespace lossgain {

struct RepresentationBundle {
  SystemSpec spec;
  std::vector<double> analytic_eigenvalues;  // eigenvalues of M, descending
  bool positive_definite = false;            // closed-form positivity condition
  std::string label;
};

/// Field restricted to one coordinate pair (x_{2i-1}, x_{2i}).
struct BlockField {
  std::function<std::array<double, 2>(double, double)> value;
  std::function<std::array<double, 4>(double, double)> jacobian;  // row-major 2x2
};

/// M = I_m (x) sigma_x + alpha^2 I, A = (gamma/2) I_m (x) [[0,-1],[1,0]],
/// D = gamma chi (x) sigma_z with chi_ii = Q_i/2.  Eigenvalues alpha^2 +- 1,
/// multiplicity m each; positive-definite iff alpha^2 > 1.  An empty field
/// list selects the constant loss-gain case F = X.
RepresentationBundle build_pairwise(std::size_t m, double gamma, double alpha,
                                    std::vector<BlockField> f = {});

/// M = beta1 M_pair + alpha^2 I + beta2 I_m (x) sigma_z; eigenvalues
/// alpha^2 +- sqrt(beta1^2 + beta2^2), multiplicity m each.
RepresentationBundle build_beta_modified(std::size_t m, double gamma, double alpha, double beta1,
                                         double beta2, std::vector<BlockField> f = {});

/// Tridiagonal M = p I + q T with lambda_k = p + 2 q cos(k pi / (N+1)) and
/// the sine diagonalizer; loss-gain balancing is generally not pairwise.
/// F defaults to X, so R = 2A for the supplied antisymmetric A.
RepresentationBundle build_appendix_rep1(std::size_t n, double p, double q, DenseMatrix a_mat);

/// Uniform off-diagonal M_ij = p delta_ij + q (1 - delta_ij); eigenvalues
/// p - q (multiplicity N-1) and p + (N-1) q.
RepresentationBundle build_appendix_rep2(std::size_t n, double p, double q, DenseMatrix a_mat);

/// Two-dimensional Landau representation: M = (1/2) [[B+C, g],[g, B-C]],
/// R = [[0,1],[-1,0]], F = X, A = R/2.
RepresentationBundle build_landau(double b, double c, double gamma);

/// Closed-form D entries of appendix representation I:
/// D_ij = p R_ij + q (R_{i+1,j} + R_{i-1,j}) with out-of-range rows zero.
DenseMatrix appendix_rep1_d(std::size_t n, double p, double q, const DenseMatrix& r);
/// Closed-form diagonalizer of appendix representation I.
DenseMatrix appendix_rep1_o(std::size_t n);
/// Closed-form symmetric / antisymmetric parts of D for representation II.
std::pair<DenseMatrix, DenseMatrix> appendix_rep2_d_split(std::size_t n, double p, double q,
                                                          const DenseMatrix& r);

}  // namespace lossgain
