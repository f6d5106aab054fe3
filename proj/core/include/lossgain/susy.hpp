#pragma once

/// Pauli Hamiltonian with balanced loss and gain and its N = 2 supersymmetry.
/// Spin-valued operators are kept in the Pauli basis {I, sx, sy, sz} with
/// PhaseOperator coefficients; products and (anti)commutators are evaluated
/// through
///   {X(x)A, Y(x)B} = (1/2)({X,Y}(x){A,B} + [X,Y](x)[A,B]),
///   [X(x)A, Y(x)B] = (1/2)({X,Y}(x)[A,B] + [X,Y](x){A,B}),
/// skipping any term whose spin factor vanishes, so everything stays inside
/// the exact degree-<=2 algebra.

#include <array>
#include <cstddef>
#include <vector>

#include "lossgain/phase_operator.hpp"

namespace lossgain {

struct SpinPhaseOperator {
  // coefficients of I, sigma_x, sigma_y, sigma_z
  std::array<PhaseOperator, 4> comp{};

  static SpinPhaseOperator from_spin(int pauli_index, const PhaseOperator& op);
  bool is_zero(double atol = 1e-12) const;
  double max_abs_coeff() const;

  SpinPhaseOperator& operator+=(const SpinPhaseOperator& o);
  SpinPhaseOperator& operator-=(const SpinPhaseOperator& o);
  SpinPhaseOperator& operator*=(Complex s);
};

SpinPhaseOperator operator+(SpinPhaseOperator a, const SpinPhaseOperator& b);
SpinPhaseOperator operator-(SpinPhaseOperator a, const SpinPhaseOperator& b);
SpinPhaseOperator operator*(Complex s, SpinPhaseOperator a);
SpinPhaseOperator operator*(double s, SpinPhaseOperator a);

SpinPhaseOperator anticommutator(const SpinPhaseOperator& a, const SpinPhaseOperator& b);
SpinPhaseOperator commutator(const SpinPhaseOperator& a, const SpinPhaseOperator& b);

/// H_S = (B/2)(Pi1^2 + Pi2^2) + (gamma/2){Pi1, Pi2} + (|omega|/2) sigma_z.
/// Region I with C = 0 only; the other regions exclude a supersymmetric
/// extension.  Throws RegionMismatch.
SpinPhaseOperator build_pauli_hamiltonian(const LandauParams& p);
/// The same Hamiltonian assembled from the frame momenta,
/// Pihat1^2 + Pihat2^2 + (|omega|/2) sigma_z; equal coefficient-wise.
SpinPhaseOperator build_pauli_hamiltonian_frame(const LandauParams& p);

struct Supercharges {
  SpinPhaseOperator q1, q2;  // sigma_x Pihat1 - sigma_y Pihat2 and sigma_x Pihat2 + sigma_y Pihat1
  SpinPhaseOperator big_q1, big_q2;  // the mixing-angle pair built from Pi1, Pi2
  double theta_tilde = 0.0;
};

Supercharges build_supercharges(const LandauParams& p);

struct SusySpectrumReport {
  std::size_t n_max = 0;
  double ground_energy = 0.0;       // minimum of the spin-down tower
  double max_pairing_error = 0.0;   // worst |E_up(n) - E_dn(n+1)| inside the trusted window
  int paired_levels = 0;
  std::vector<double> up;           // ascending orbital eigenvalues + |omega|/2
  std::vector<double> down;         // ascending orbital eigenvalues - |omega|/2
  bool truncation_warning = false;
};

/// Fock x spin diagonalization of H_S.  The spin structure is diagonal, so
/// the two towers come from one orbital diagonalization shifted by
/// +-|omega|/2; nonzero levels pair across the towers and one zero-energy
/// sector remains unpaired (unbroken supersymmetry).
SusySpectrumReport susy_spectrum_check(const LandauParams& p, std::size_t n_max);

}  // namespace lossgain
