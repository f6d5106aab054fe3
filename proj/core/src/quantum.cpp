#include "lossgain/quantum.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "lossgain/errors.hpp"

namespace lossgain {

namespace {

struct GridEval {
  double residual = 0.0;
};

// Residual of a acting on phi = w^m exp(-|w|^2/8), w = xi x1 - xi* x2,
// with p_j = -i d_j realized by 4th-order central differences; the outermost
// two cells are excluded from the norms.
double annihilation_residual(const LandauParams& p, int m, std::size_t n, double hw) {
  const Complex xi = std::sqrt(2.0 / p.abs_omega) *
                     Complex{std::sqrt(p.lambda_plus), std::sqrt(p.lambda_minus)};
  const double h = 2.0 * hw / static_cast<double>(n - 1);
  std::vector<Complex> phi(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x1 = -hw + static_cast<double>(i) * h;
    for (std::size_t j = 0; j < n; ++j) {
      const double x2 = -hw + static_cast<double>(j) * h;
      const Complex w = xi * x1 - std::conj(xi) * x2;
      Complex poly{1.0, 0.0};
      for (int k = 0; k < m; ++k) poly *= w;
      phi[i * n + j] = poly * std::exp(-0.125 * std::norm(w));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return phi[i * n + j]; };

  double num = 0.0, den = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double x1 = -hw + static_cast<double>(i) * h;
    for (std::size_t j = 2; j + 2 < n; ++j) {
      const double x2 = -hw + static_cast<double>(j) * h;
      const Complex d1 = (-at(i + 2, j) + 8.0 * at(i + 1, j) - 8.0 * at(i - 1, j) + at(i - 2, j)) / (12.0 * h);
      const Complex d2 = (-at(i, j + 2) + 8.0 * at(i, j + 1) - 8.0 * at(i, j - 1) + at(i, j - 2)) / (12.0 * h);
      const Complex p1 = Complex{0.0, -1.0} * d1;
      const Complex p2 = Complex{0.0, -1.0} * d2;
      const Complex f = at(i, j);
      const Complex a_phi =
          0.5 * (std::conj(xi) * (p1 + 0.5 * x2 * f) + xi * (p2 - 0.5 * x1 * f));
      num += std::norm(a_phi);
      den += std::norm(f);
    }
  }
  return std::sqrt(num / den);
}

// Peak location of the density along a ray, refined by quadratic interpolation.
double ray_peak(const LandauParams& p, int m, const std::array<double, 2>& dir, double hw,
                std::size_t samples) {
  const Complex xi = std::sqrt(2.0 / p.abs_omega) *
                     Complex{std::sqrt(p.lambda_plus), std::sqrt(p.lambda_minus)};
  std::vector<double> dens(samples);
  const double dt = hw / static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) * dt;
    const Complex w = xi * (dir[0] * t) - std::conj(xi) * (dir[1] * t);
    dens[k] = std::pow(std::norm(w), m) * std::exp(-0.25 * std::norm(w));
  }
  std::size_t imax = 0;
  for (std::size_t k = 1; k < samples; ++k)
    if (dens[k] > dens[imax]) imax = k;
  if (imax == 0 || imax + 1 == samples) return static_cast<double>(imax) * dt;
  const double y0 = dens[imax - 1], y1 = dens[imax], y2 = dens[imax + 1];
  const double shift = 0.5 * (y0 - y2) / (y0 - 2.0 * y1 + y2);
  return (static_cast<double>(imax) + shift) * dt;
}

// Second-moment widths along a ray for the nodeless m = 0 state.
double ray_width(const LandauParams& p, const std::array<double, 2>& dir, double hw,
                 std::size_t samples) {
  const Complex xi = std::sqrt(2.0 / p.abs_omega) *
                     Complex{std::sqrt(p.lambda_plus), std::sqrt(p.lambda_minus)};
  double m0 = 0.0, m2 = 0.0;
  const double dt = hw / static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) * dt;
    const Complex w = xi * (dir[0] * t) - std::conj(xi) * (dir[1] * t);
    const double d = std::exp(-0.25 * std::norm(w));
    m0 += d;
    m2 += t * t * d;
  }
  return std::sqrt(m2 / m0);
}

}  // namespace

GroundStateReport ground_state_eval(const LandauParams& p, int m, std::size_t grid_n,
                                    double half_width, double residual_tol) {
  if (p.region != Region::I) fail(ErrorCode::RegionMismatch, "ground states exist in Region I");
  if (p.c != 0.0) fail(ErrorCode::RegionMismatch, "printed ground states require C = 0");
  if (m < 0) fail(ErrorCode::BadShape, "degeneracy index m must be >= 0");
  if (grid_n < 16) fail(ErrorCode::GridTooCoarse, "grid must have at least 16 points per axis");

  GroundStateReport rep;
  rep.grid_n = grid_n;
  rep.half_width = half_width > 0.0 ? half_width : 6.0 / std::sqrt(p.abs_omega);
  rep.residual = annihilation_residual(p, m, grid_n, rep.half_width);
  const std::size_t nc = grid_n / 2 + (grid_n / 2 + 1) % 2;  // about half, odd for symmetry
  rep.residual_coarse = annihilation_residual(p, m, nc, rep.half_width);
  if (rep.residual > residual_tol && rep.residual_coarse > 8.0 * rep.residual)
    fail(ErrorCode::GridTooCoarse, "annihilation residual is dominated by the grid discretization");

  rep.predicted_ratio = std::sqrt(p.lambda_plus / p.lambda_minus);
  const std::array<double, 2> u{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  const std::array<double, 2> v{1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2};
  if (m >= 1) {
    const double pu = ray_peak(p, m, u, rep.half_width, grid_n);
    const double pv = ray_peak(p, m, v, rep.half_width, grid_n);
    rep.axis_ratio = pu / pv;
  } else {
    rep.axis_ratio = ray_width(p, u, rep.half_width, grid_n) / ray_width(p, v, rep.half_width, grid_n);
  }
  return rep;
}

HallQuantumResult hall_quantum(const LandauParams& p, double e_field, double k2, int n_levels) {
  if (p.region != Region::I) fail(ErrorCode::RegionMismatch, "quantum Hall spectrum is given in Region I");
  if (p.c != 0.0) fail(ErrorCode::RegionMismatch, "quantum Hall analysis assumes C = 0");
  const double w = p.abs_omega;
  HallQuantumResult out;
  // calE = S^{-1} O^T (E, 0): the frame force components
  const CanonicalFrame f = landau_frame(p);
  const std::array<double, 2> ef{e_field, 0.0};
  const std::vector<double> fe = position_to_frame(f, ef);
  out.e_frame = {fe[0], fe[1]};
  out.abs_e = std::hypot(fe[0], fe[1]);
  out.shifted_center = 2.0 * k2 / w + out.abs_e / (w * w);
  out.energies.reserve(static_cast<std::size_t>(n_levels));
  for (int n = 0; n < n_levels; ++n)
    out.energies.push_back((n + 0.5) * w -
                           (out.abs_e * out.abs_e + 4.0 * k2 * w * out.abs_e) / (4.0 * w * w));
  // frame current points along calX2; map through O S to the x plane
  const std::vector<double> jx = position_from_frame(f, std::vector<double>{0.0, 1.0});
  const double nrm = std::hypot(jx[0], jx[1]);
  out.current_direction = {jx[0] / nrm, jx[1] / nrm};
  return out;
}

}  // namespace lossgain
