#include "lossgain/system.hpp"

#include <algorithm>
#include <cmath>

#include "lossgain/errors.hpp"

namespace lossgain {

namespace {

void check_kinetic_matrix(const DenseMatrix& big_m) {
  if (!big_m.is_symmetric(tol::kSym)) fail(ErrorCode::NotSymmetric, "kinetic matrix M must be symmetric");
  // singularity test on the spectrum: |det| underflows for moderate N even
  // when every eigenvalue is far from zero
  const EigSym e = eig_sym(big_m);
  const double cut = tol::kDetRel * std::max(1.0, big_m.max_norm());
  for (double l : e.values)
    if (std::abs(l) < cut) fail(ErrorCode::SingularM, "kinetic matrix M is singular within tolerance");
}

}  // namespace

SystemSpec make_system(std::size_t n, DenseMatrix big_m, DenseMatrix a_mat, VectorFn field_f,
                       MatrixFn jacobian_f, ScalarFn potential, VectorFn grad_v) {
  if (n == 0) fail(ErrorCode::BadShape, "particle count must be >= 1");
  if (big_m.rows() != n || big_m.cols() != n) fail(ErrorCode::BadShape, "M must be n x n");
  if (a_mat.rows() != n || a_mat.cols() != n) fail(ErrorCode::BadShape, "A must be n x n");
  check_kinetic_matrix(big_m);
  if (!a_mat.is_antisymmetric(tol::kSym)) fail(ErrorCode::BadShape, "gauge matrix A must be antisymmetric");
  SystemSpec s;
  s.n = n;
  s.big_m = std::move(big_m);
  s.a_mat = std::move(a_mat);
  s.field_f = std::move(field_f);
  s.jacobian_f = std::move(jacobian_f);
  s.potential = std::move(potential);
  s.grad_v = std::move(grad_v);
  return s;
}

std::vector<double> eval_field(const SystemSpec& spec, std::span<const double> x) {
  if (spec.field_f) return spec.field_f(x);
  return std::vector<double>(x.begin(), x.end());
}

DenseMatrix eval_jacobian(const SystemSpec& spec, std::span<const double> x) {
  if (spec.jacobian_f) return spec.jacobian_f(x);
  if (!spec.field_f) return DenseMatrix::identity(spec.n);
  // central differences, step scaled by the coordinate size
  DenseMatrix j(spec.n, spec.n);
  std::vector<double> xp(x.begin(), x.end());
  for (std::size_t c = 0; c < spec.n; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[c]));
    xp[c] = x[c] + h;
    const std::vector<double> fp = spec.field_f(xp);
    xp[c] = x[c] - h;
    const std::vector<double> fm = spec.field_f(xp);
    xp[c] = x[c];
    for (std::size_t r = 0; r < spec.n; ++r) j(r, c) = (fp[r] - fm[r]) / (2.0 * h);
  }
  return j;
}

double eval_potential(const SystemSpec& spec, std::span<const double> x) {
  return spec.potential ? spec.potential(x) : 0.0;
}

std::vector<double> eval_grad_v(const SystemSpec& spec, std::span<const double> x) {
  if (spec.grad_v) return spec.grad_v(x);
  if (!spec.potential) return std::vector<double>(spec.n, 0.0);
  std::vector<double> g(spec.n, 0.0);
  std::vector<double> xp(x.begin(), x.end());
  for (std::size_t c = 0; c < spec.n; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[c]));
    xp[c] = x[c] + h;
    const double vp = spec.potential(xp);
    xp[c] = x[c] - h;
    const double vm = spec.potential(xp);
    xp[c] = x[c];
    g[c] = (vp - vm) / (2.0 * h);
  }
  return g;
}

DerivedMatrices derive_matrices(const SystemSpec& spec, std::span<const double> at) {
  check_kinetic_matrix(spec.big_m);
  const DenseMatrix j = eval_jacobian(spec, at);
  const DenseMatrix aj = spec.a_mat * j;
  DerivedMatrices out;
  out.r_mat = aj - aj.transpose();
  out.d_mat = spec.big_m * out.r_mat;
  const std::size_t n = spec.n;
  out.d_diag = DenseMatrix(n, n);
  out.d_offsym = DenseMatrix(n, n);
  out.d_anti = DenseMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.d_diag(i, i) = out.d_mat(i, i);
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      const Complex s = 0.5 * (out.d_mat(i, k) + out.d_mat(k, i));
      const Complex a = 0.5 * (out.d_mat(i, k) - out.d_mat(k, i));
      out.d_offsym(i, k) = s;
      out.d_anti(i, k) = a;
    }
  }
  return out;
}

BalanceReport check_balance(std::span<const double> eta_diag, double tol_alg) {
  BalanceReport rep;
  double scale = 0.0;
  for (double e : eta_diag) {
    rep.trace += e;
    scale = std::max(scale, std::abs(e));
  }
  const double cut = tol_alg * std::max(1.0, scale);
  rep.balanced = std::abs(rep.trace) <= cut;
  for (std::size_t i = 0; i < eta_diag.size(); ++i) {
    if (eta_diag[i] > cut)
      rep.loss_indices.push_back(i);
    else if (eta_diag[i] < -cut)
      rep.gain_indices.push_back(i);
  }
  return rep;
}

std::vector<double> acceleration(const SystemSpec& spec, std::span<const double> x, std::span<const double> v) {
  const DenseMatrix j = eval_jacobian(spec, x);
  const DenseMatrix aj = spec.a_mat * j;
  const DenseMatrix r = aj - aj.transpose();
  const DenseMatrix mr = spec.big_m * r;
  std::vector<double> acc = apply_real(mr, v);
  for (double& a : acc) a *= 2.0;
  if (spec.potential || spec.grad_v) {
    const std::vector<double> g = eval_grad_v(spec, x);
    const std::vector<double> mg = apply_real(spec.big_m, g);
    for (std::size_t i = 0; i < spec.n; ++i) acc[i] -= 2.0 * mg[i];
  }
  return acc;
}

std::vector<double> eom_field(const SystemSpec& spec, std::span<const double> state) {
  const std::size_t n = spec.n;
  if (state.size() != 2 * n) fail(ErrorCode::ShapeMismatch, "state must have size 2n");
  std::span<const double> x = state.subspan(0, n);
  std::span<const double> v = state.subspan(n, n);
  std::vector<double> out(2 * n);
  std::copy(v.begin(), v.end(), out.begin());
  const std::vector<double> acc = acceleration(spec, x, v);
  std::copy(acc.begin(), acc.end(), out.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

Trajectory integrate(const SystemSpec& spec, std::span<const double> x0, std::span<const double> v0,
                     double t_end, double dt) {
  if (!(dt > 0.0) || !(t_end > 0.0)) fail(ErrorCode::BadShape, "integrate requires dt > 0 and t_end > 0");
  if (x0.size() != spec.n || v0.size() != spec.n) fail(ErrorCode::ShapeMismatch, "initial data must have size n");
  check_kinetic_matrix(spec.big_m);

  const std::size_t steps = static_cast<std::size_t>(std::llround(t_end / dt));
  std::vector<double> y(2 * spec.n);
  std::copy(x0.begin(), x0.end(), y.begin());
  std::copy(v0.begin(), v0.end(), y.begin() + static_cast<std::ptrdiff_t>(spec.n));

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(y);

  std::vector<double> k1, k2, k3, k4, tmp(2 * spec.n);
  for (std::size_t s = 0; s < steps; ++s) {
    k1 = eom_field(spec, y);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    k2 = eom_field(spec, tmp);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    k3 = eom_field(spec, tmp);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + dt * k3[i];
    k4 = eom_field(spec, tmp);
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    for (double c : y)
      if (!std::isfinite(c)) fail(ErrorCode::NonFinite, "trajectory overflowed during integration");
    traj.times.push_back(static_cast<double>(s + 1) * dt);
    traj.states.push_back(y);
  }
  return traj;
}

std::vector<double> solve_sym(const DenseMatrix& m, std::span<const double> b) {
  const EigSym e = eig_sym(m);
  const std::size_t n = m.rows();
  std::vector<double> y(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double proj = 0.0;
    for (std::size_t i = 0; i < n; ++i) proj += e.vectors(i, j).real() * b[i];
    if (std::abs(e.values[j]) < tol::kDetRel * std::max(1.0, m.max_norm()))
      fail(ErrorCode::SingularM, "solve_sym: matrix singular within tolerance");
    y[j] = proj / e.values[j];
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += e.vectors(i, j).real() * y[j];
  return x;
}

double hamiltonian_value(const SystemSpec& spec, std::span<const double> x, std::span<const double> v) {
  const std::vector<double> minv_v = solve_sym(spec.big_m, v);
  double kin = 0.0;
  for (std::size_t i = 0; i < spec.n; ++i) kin += v[i] * minv_v[i];
  return 0.25 * kin + eval_potential(spec, x);
}

}  // namespace lossgain
