#pragma once

/// Grid checks of the degenerate Region-I ground states and the quantum Hall
/// spectrum.  Ground states for C = 0 have the form
/// phi = (xi x1 - xi* x2)^m exp(-|xi x1 - xi* x2|^2 / 8); applying the
/// annihilation operator as a finite-difference differential operator gives a
/// relative residual that measures only discretization.  All wavefunction
/// quantities are normalization-free.

#include <array>
#include <cstddef>
#include <vector>

#include "lossgain/landau.hpp"

namespace lossgain {

struct GroundStateReport {
  std::size_t grid_n = 0;
  double half_width = 0.0;
  double residual = 0.0;          // ||a phi|| / ||phi||
  double residual_coarse = 0.0;   // same on the stride-2 subgrid
  double axis_ratio = 0.0;        // major/minor of the max-density locus
  double predicted_ratio = 0.0;   // sqrt(lambda+ / lambda-) from xi
};

/// Evaluates |phi|^2 and the annihilation residual on a grid_n^2 lattice over
/// [-half_width, half_width]^2 (default width 6/sqrt|omega|), with 4th-order
/// central differences for the momenta.  Throws GridTooCoarse when the
/// residual exceeds `residual_tol` while grid refinement shows it is pure
/// discretization error.  Requires Region I and C = 0; m >= 0.
GroundStateReport ground_state_eval(const LandauParams& p, int m, std::size_t grid_n,
                                    double half_width = 0.0, double residual_tol = 1e-3);

struct HallQuantumResult {
  std::array<double, 2> e_frame{};  // effective field in frame coordinates
  double abs_e = 0.0;
  double shifted_center = 0.0;      // 2 k2/|omega| + |E|/|omega|^2
  std::vector<double> energies;     // E_{n,k2}, n = 0..n_levels-1
  // probability current: J1 = 0, J2 = 2 rho (k2 - (|omega|/2) calX1);
  // mapped back, the drift direction picks up components along both axes.
  std::array<double, 2> current_direction{};  // unit vector in the x plane
};

/// Analytic quantum Hall data for C = 0, Region I:
/// E_{n,k2} = (n + 1/2)|omega| - (|calE|^2 + 4 k2 |omega| |calE|) / (4 |omega|^2).
HallQuantumResult hall_quantum(const LandauParams& p, double e_field, double k2, int n_levels);

}  // namespace lossgain
