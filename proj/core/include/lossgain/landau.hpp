#pragma once

/// Classical Landau system with balanced loss and gain: derived parameters
/// (Delta, lambda+-, |omega|, theta, xi1, xi2, phi1, phi2), closed-form
/// solutions in all three regions, cyclotron-center constants of motion, the
/// smooth gamma -> 0 limit, and the Hall drift.

#include <array>
#include <complex>
#include <span>
#include <utility>

#include "lossgain/frame.hpp"
#include "lossgain/matrix.hpp"

namespace lossgain {

enum class Region : int { I = 1, II = 2, III = 3 };

struct LandauParams {
  double b = 0.0, c = 0.0, gamma = 0.0;
  double delta = 0.0;         // sqrt(C^2 + gamma^2)
  double lambda_plus = 0.0;   // (B + Delta)/2
  double lambda_minus = 0.0;  // (B - Delta)/2
  double abs_omega = 0.0;     // sqrt(|B^2 - Delta^2|), effective cyclotron frequency
  Region region = Region::I;
  double theta = 0.0;  // rotation angle arctan((Delta - C)/gamma)
  double phi1 = 0.0, phi2 = 0.0;
  Complex xi1{}, xi2{};
};

/// Throws BoundarySingular at |B| = Delta and GammaZeroUndefined when
/// gamma = 0 with C != 0 (the diagonalizing rotation degenerates there).
LandauParams derive_params(double b, double c, double gamma);

/// The 2x2 canonical frame assembled from the closed-form diagonalizer.
CanonicalFrame landau_frame(const LandauParams& p);

struct State2 {
  std::array<double, 2> x{};
  std::array<double, 2> v{};
};

/// Closed-form orbit with integration constants fitted from initial data by
/// evaluating the solution and its derivative at t = 0 (a 4x4 linear solve).
/// Regions I and III carry a center and a complex oscillation amplitude; in
/// Region II the frame solution is hyperbolic with cosh/sinh coefficients.
struct ClosedFormOrbit {
  Region region = Region::I;
  std::array<double, 2> center{};  // frame center in Region II, plane center otherwise
  Complex w{};                     // oscillatory amplitude-phase constant (I, III)
  double cosh_coeff = 0.0;         // Region II
  double sinh_coeff = 0.0;         // Region II
  double z2_plus_z2conj = 0.0;     // Region II branch indicator Z^2 + Z*^2
};

/// Fit the closed-form constants.  Throws ComplexBranch when Region-II
/// initial data makes Z^2 + Z*^2 negative, where the printed hyperbolic
/// amplitude would turn complex.
ClosedFormOrbit fit_closed_form(const LandauParams& p, std::span<const double> x0,
                                std::span<const double> v0);

/// Evaluate the fitted orbit.  Throws RegionMismatch when the orbit's region
/// tag does not match the parameter set.
State2 closed_form(const LandauParams& p, const ClosedFormOrbit& orbit, double t);

/// |Z| with Z = xi1 vy + xi2 vx; constant along Region I/III orbits and equal
/// to the fitted |w|.
double z_magnitude(const LandauParams& p, std::span<const double> v);

struct MotionConstants {
  std::array<double, 2> c_vec{};  // cyclotron center in the canonical frame
};

/// C^a = calX + (1/|omega|) R eta^a calXdot, evaluated through the frame map.
MotionConstants constants_of_motion(const LandauParams& p, std::span<const double> x,
                                    std::span<const double> v);

/// Exact V = 0 solution with amplitude |A| and phase phi1, written so the
/// gamma -> 0 limit is smooth; at gamma = 0 it is the standard Landau orbit
/// with the elliptic axis ratio sqrt((B-C)/(B+C)).  Throws BoundarySingular
/// at B = +-C.
State2 gamma_zero_limit(double b, double c, double amp, double phi1, double t, double gamma = 0.0);

struct HallDrift {
  std::array<double, 2> velocity{};  // (-E gamma / omega^2, -E B / omega^2)
  double angle = 0.0;                // arctan(B/gamma), between drift line and the field direction
};

/// Uniform electric field E along x1, C = 0; requires Region I (|B| > |gamma|).
HallDrift hall_drift(double b, double gamma, double e);

/// Closed-form Hall orbit: cyclotron oscillation superposed on the drift.
State2 hall_solve(const LandauParams& p, double e, std::span<const double> x0,
                  std::span<const double> v0, double t);

/// The Hall scalar potential V = -(E/omega^2)(B x1 - gamma x2).
double hall_potential(double b, double gamma, double e, std::span<const double> x);
std::array<double, 2> hall_potential_gradient(double b, double gamma, double e);

}  // namespace lossgain
