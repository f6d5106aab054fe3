#pragma once

/// General many-particle loss-gain formalism: a system is assembled from a
/// real symmetric nonsingular kinetic matrix M, a real antisymmetric gauge
/// matrix A, a field map F(X) with Jacobian J, and a potential V.  From these
/// the velocity-coupling matrices R = AJ - (AJ)^T and D = M R follow, the
/// balance condition Tr(D) = 0 holds structurally, and the second-order
/// equations of motion Xdd = 2 M R Xd - 2 M dV/dX are integrated with a
/// fixed-step classical RK4 scheme.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lossgain/matrix.hpp"

namespace lossgain {

using VectorFn = std::function<std::vector<double>(std::span<const double>)>;
using MatrixFn = std::function<DenseMatrix(std::span<const double>)>;
using ScalarFn = std::function<double(std::span<const double>)>;

struct SystemSpec {
  std::size_t n = 0;
  DenseMatrix big_m;   // M, real symmetric, nonsingular
  DenseMatrix a_mat;   // A, real antisymmetric
  VectorFn field_f;    // F(X); identity map when empty
  MatrixFn jacobian_f; // analytic Jacobian of F; finite differences when empty
  ScalarFn potential;  // V(X); zero when empty
  VectorFn grad_v;     // analytic gradient of V; finite differences when empty
};

/// Validates the structural invariants (shapes, symmetry of M, antisymmetry
/// of A, nonsingularity of M) and fills in the default field F = X.
SystemSpec make_system(std::size_t n, DenseMatrix big_m, DenseMatrix a_mat, VectorFn field_f = {},
                       MatrixFn jacobian_f = {}, ScalarFn potential = {}, VectorFn grad_v = {});

std::vector<double> eval_field(const SystemSpec& spec, std::span<const double> x);
DenseMatrix eval_jacobian(const SystemSpec& spec, std::span<const double> x);
double eval_potential(const SystemSpec& spec, std::span<const double> x);
std::vector<double> eval_grad_v(const SystemSpec& spec, std::span<const double> x);

struct DerivedMatrices {
  DenseMatrix r_mat;     // R = AJ - (AJ)^T, antisymmetric by construction
  DenseMatrix d_mat;     // D = M R
  DenseMatrix d_diag;    // diagonal part (loss-gain coefficients)
  DenseMatrix d_offsym;  // symmetric with vanishing diagonal (non-Lorentzian coupling)
  DenseMatrix d_anti;    // antisymmetric part (Lorentz interaction)
};

DerivedMatrices derive_matrices(const SystemSpec& spec, std::span<const double> at);

struct BalanceReport {
  bool balanced = false;
  double trace = 0.0;
  // eta_ii > 0 marks loss, eta_ii < 0 gain; balancing need not pair them up.
  std::vector<std::size_t> loss_indices;
  std::vector<std::size_t> gain_indices;
};

BalanceReport check_balance(std::span<const double> eta_diag, double tol_alg = tol::kAlg);

/// First-order vector field on (X, Xd); state has size 2n.
std::vector<double> eom_field(const SystemSpec& spec, std::span<const double> state);
std::vector<double> acceleration(const SystemSpec& spec, std::span<const double> x, std::span<const double> v);

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // each (x1..xn, v1..vn)
};

/// Fixed-step RK4.  Throws NonFinite when the state overflows, which is the
/// expected outcome for Region-II runs over long horizons.
Trajectory integrate(const SystemSpec& spec, std::span<const double> x0, std::span<const double> v0,
                     double t_end, double dt);

/// H = (1/4) Xd^T M^{-1} Xd + V(X); conserved along exact trajectories.
double hamiltonian_value(const SystemSpec& spec, std::span<const double> x, std::span<const double> v);

/// Solve M y = b for real symmetric nonsingular M (via eig_sym).
std::vector<double> solve_sym(const DenseMatrix& m, std::span<const double> b);

}  // namespace lossgain
