#include "lossgain/landau.hpp"

#include <cmath>

#include "lossgain/errors.hpp"

namespace lossgain {

namespace {

constexpr double kBoundaryTol = 1e-12;

// 2x2 linear solve.
std::array<double, 2> solve2(const std::array<double, 4>& a, const std::array<double, 2>& b) {
  const double det = a[0] * a[3] - a[1] * a[2];
  if (std::abs(det) < 1e-300) fail(ErrorCode::SingularM, "degenerate 2x2 system");
  return {(b[0] * a[3] - b[1] * a[1]) / det, (a[0] * b[1] - a[2] * b[0]) / det};
}

}  // namespace

LandauParams derive_params(double b, double c, double gamma) {
  LandauParams p;
  p.b = b;
  p.c = c;
  p.gamma = gamma;
  p.delta = std::hypot(c, gamma);
  if (std::abs(std::abs(b) - p.delta) <= kBoundaryTol * std::max(1.0, std::abs(b)))
    fail(ErrorCode::BoundarySingular, "|B| = Delta lies on a region boundary");
  if (gamma == 0.0 && c != 0.0)
    fail(ErrorCode::GammaZeroUndefined, "gamma = 0 with C != 0: diagonalizing rotation undefined");
  p.lambda_plus = 0.5 * (b + p.delta);
  p.lambda_minus = 0.5 * (b - p.delta);
  p.abs_omega = std::sqrt(std::abs(b * b - p.delta * p.delta));
  if (b > p.delta)
    p.region = Region::I;
  else if (b < -p.delta)
    p.region = Region::III;
  else
    p.region = Region::II;
  p.theta = (gamma == 0.0 && p.delta == c) ? 0.0 : std::atan2(p.delta - c, gamma);
  const double alp = std::sqrt(std::abs(p.lambda_plus));
  const double alm = std::sqrt(std::abs(p.lambda_minus));
  const double ct = std::cos(p.theta), st = std::sin(p.theta);
  const double norm = 2.0 / std::sqrt(p.abs_omega);
  p.xi1 = norm * Complex{alp * ct, alm * st};
  p.xi2 = norm * Complex{-alp * st, alm * ct};
  p.phi1 = std::atan(alm / alp * std::tan(p.theta));
  p.phi2 = std::atan(alp / alm * std::tan(p.theta));
  return p;
}

CanonicalFrame landau_frame(const LandauParams& p) {
  const double ct = std::cos(p.theta), st = std::sin(p.theta);
  CanonicalFrame f;
  f.eigenvalues = {p.lambda_plus, p.lambda_minus};
  f.region_index = static_cast<int>(p.region);
  f.o_mat = DenseMatrix::from_real(2, 2, {ct, -st, st, ct});
  f.s_mat = DenseMatrix(2, 2);
  f.s_mat(0, 0) = std::sqrt(std::abs(p.lambda_plus));
  f.s_mat(1, 1) = std::sqrt(std::abs(p.lambda_minus));
  f.eta = DenseMatrix(2, 2);
  f.eta(0, 0) = p.lambda_plus > 0.0 ? 1.0 : -1.0;
  f.eta(1, 1) = p.lambda_minus > 0.0 ? 1.0 : -1.0;
  // O^T R O = R for a rotation, so calR = sqrt(|l+ l-|) R = (|omega|/2) R.
  const double half_omega = 0.5 * p.abs_omega;
  f.r_cal = DenseMatrix::from_real(2, 2, {0.0, half_omega, -half_omega, 0.0});
  return f;
}

ClosedFormOrbit fit_closed_form(const LandauParams& p, std::span<const double> x0,
                                std::span<const double> v0) {
  ClosedFormOrbit orbit;
  orbit.region = p.region;
  const double w = p.abs_omega;

  if (p.region == Region::II) {
    const CanonicalFrame f = landau_frame(p);
    const std::vector<double> cx = position_to_frame(f, x0);
    const std::vector<double> cv = position_to_frame(f, v0);
    orbit.sinh_coeff = cv[0] / w;
    orbit.cosh_coeff = cv[1] / w;
    orbit.center = {cx[0] - orbit.cosh_coeff, cx[1] - orbit.sinh_coeff};
    const Complex z = p.xi1 * v0[1] + p.xi2 * v0[0];
    orbit.z2_plus_z2conj = 2.0 * (z * z).real();
    if (orbit.z2_plus_z2conj < 0.0)
      fail(ErrorCode::ComplexBranch,
           "Region-II initial data puts Z^2 + Z*^2 below zero: hyperbolic amplitude not real");
    return orbit;
  }

  // Regions I and III: x1 = C1 + a1 Re[w e^{i(|omega| t + s phi1)}],
  //                    x2 = C2 + s a2 Im[w e^{i(|omega| t + s phi2)}], s = -1 (I), +1 (III).
  const double s = (p.region == Region::I) ? -1.0 : 1.0;
  const double a1 = std::abs(p.xi1) / (2.0 * w);
  const double a2 = std::abs(p.xi2) / (2.0 * w);
  const double ph1 = s * p.phi1, ph2 = s * p.phi2;
  const double c1 = std::cos(ph1), s1 = std::sin(ph1);
  const double c2 = std::cos(ph2), s2 = std::sin(ph2);
  // velocities pin (wr, wi); centers follow
  const std::array<double, 4> vmat = {-a1 * w * s1, -a1 * w * c1, s * a2 * w * c2, -s * a2 * w * s2};
  const std::array<double, 2> wri = solve2(vmat, {v0[0], v0[1]});
  orbit.w = Complex{wri[0], wri[1]};
  orbit.center = {x0[0] - a1 * (wri[0] * c1 - wri[1] * s1), x0[1] - s * a2 * (wri[0] * s2 + wri[1] * c2)};
  return orbit;
}

State2 closed_form(const LandauParams& p, const ClosedFormOrbit& orbit, double t) {
  if (orbit.region != p.region)
    fail(ErrorCode::RegionMismatch, "orbit constants were fitted in a different region");
  const double w = p.abs_omega;
  State2 st;

  if (p.region == Region::II) {
    const double ch = std::cosh(w * t), sh = std::sinh(w * t);
    const double a = orbit.cosh_coeff, b = orbit.sinh_coeff;
    const std::array<double, 2> cx = {orbit.center[0] + a * ch + b * sh,
                                      orbit.center[1] + b * ch + a * sh};
    const std::array<double, 2> cv = {w * (a * sh + b * ch), w * (b * sh + a * ch)};
    const CanonicalFrame f = landau_frame(p);
    const std::vector<double> x = position_from_frame(f, cx);
    const std::vector<double> v = position_from_frame(f, cv);
    st.x = {x[0], x[1]};
    st.v = {v[0], v[1]};
    return st;
  }

  const double s = (p.region == Region::I) ? -1.0 : 1.0;
  const double a1 = std::abs(p.xi1) / (2.0 * w);
  const double a2 = std::abs(p.xi2) / (2.0 * w);
  const double u1 = w * t + s * p.phi1, u2 = w * t + s * p.phi2;
  const double wr = orbit.w.real(), wi = orbit.w.imag();
  st.x[0] = orbit.center[0] + a1 * (wr * std::cos(u1) - wi * std::sin(u1));
  st.x[1] = orbit.center[1] + s * a2 * (wr * std::sin(u2) + wi * std::cos(u2));
  st.v[0] = a1 * w * (-wr * std::sin(u1) - wi * std::cos(u1));
  st.v[1] = s * a2 * w * (wr * std::cos(u2) - wi * std::sin(u2));
  return st;
}

double z_magnitude(const LandauParams& p, std::span<const double> v) {
  return std::abs(p.xi1 * v[1] + p.xi2 * v[0]);
}

MotionConstants constants_of_motion(const LandauParams& p, std::span<const double> x,
                                    std::span<const double> v) {
  const CanonicalFrame f = landau_frame(p);
  const std::vector<double> cx = position_to_frame(f, x);
  const std::vector<double> cv = position_to_frame(f, v);
  const double e1 = f.eta(0, 0).real(), e2 = f.eta(1, 1).real();
  // calX + (1/|omega|) R eta calXdot with R = [[0,1],[-1,0]]
  MotionConstants mc;
  mc.c_vec[0] = cx[0] + e2 * cv[1] / p.abs_omega;
  mc.c_vec[1] = cx[1] - e1 * cv[0] / p.abs_omega;
  return mc;
}

State2 gamma_zero_limit(double b, double c, double amp, double phi1, double t, double gamma) {
  if (std::abs(std::abs(b) - std::abs(c)) <= kBoundaryTol * std::max(1.0, std::abs(b)))
    fail(ErrorCode::BoundarySingular, "B = +-C lies in Region II: no periodic solution");
  const double w2 = b * b - c * c - gamma * gamma;
  if (w2 <= 0.0) fail(ErrorCode::BoundarySingular, "parameters outside the periodic regions");
  const double w = std::sqrt(w2);
  const double rho = std::sqrt((b - c) / (b + c));
  // phase offset between the two components, fixed by the equations of motion;
  // its principal value reduces to phi2 = phi1 (mod pi) at gamma = 0.
  const double sgn = (b + c) > 0.0 ? 1.0 : -1.0;
  const double phi2 = phi1 + std::atan2(sgn * gamma, -sgn * w);
  State2 st;
  st.x[0] = amp * std::cos(w * t + phi1);
  st.x[1] = rho * amp * std::sin(w * t + phi2);
  st.v[0] = -amp * w * std::sin(w * t + phi1);
  st.v[1] = rho * amp * w * std::cos(w * t + phi2);
  return st;
}

HallDrift hall_drift(double b, double gamma, double e) {
  const double w2 = b * b - gamma * gamma;
  if (std::abs(std::abs(b) - std::abs(gamma)) <= kBoundaryTol * std::max(1.0, std::abs(b)) || w2 == 0.0)
    fail(ErrorCode::BoundarySingular, "B = +-gamma: Hall system is singular");
  if (std::abs(b) < std::abs(gamma))
    fail(ErrorCode::RegionMismatch, "Hall drift requires Region I (|B| > |gamma|)");
  HallDrift d;
  d.velocity = {-e * gamma / w2, -e * b / w2};
  d.angle = std::atan(b / gamma);
  return d;
}

State2 hall_solve(const LandauParams& p, double e, std::span<const double> x0,
                  std::span<const double> v0, double t) {
  if (p.region != Region::I) fail(ErrorCode::RegionMismatch, "Hall solution is given in Region I");
  if (p.c != 0.0) fail(ErrorCode::RegionMismatch, "Hall solution assumes C = 0");
  const HallDrift d = hall_drift(p.b, p.gamma, e);
  // X(t) = X_osc(t) + drift * t: the drift solves the steady-state balance,
  // the oscillatory part is the homogeneous closed form with v0 - drift.
  const std::array<double, 2> vh = {v0[0] - d.velocity[0], v0[1] - d.velocity[1]};
  const ClosedFormOrbit orbit = fit_closed_form(p, x0, vh);
  State2 st = closed_form(p, orbit, t);
  st.x[0] += d.velocity[0] * t;
  st.x[1] += d.velocity[1] * t;
  st.v[0] += d.velocity[0];
  st.v[1] += d.velocity[1];
  return st;
}

double hall_potential(double b, double gamma, double e, std::span<const double> x) {
  const double w2 = b * b - gamma * gamma;
  return -e / w2 * (b * x[0] - gamma * x[1]);
}

std::array<double, 2> hall_potential_gradient(double b, double gamma, double e) {
  const double w2 = b * b - gamma * gamma;
  return {-e * b / w2, e * gamma / w2};
}

}  // namespace lossgain
