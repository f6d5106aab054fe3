#include "lossgain/representations.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <utility>

#include "lossgain/errors.hpp"

namespace lossgain {

namespace {

// Global F and J assembled from block-local fields; empty list means F = X.
std::pair<VectorFn, MatrixFn> assemble_block_field(std::size_t m, std::vector<BlockField> f) {
  if (f.empty()) return {VectorFn{}, MatrixFn{}};
  if (f.size() != m) fail(ErrorCode::BadShape, "need one block field per coordinate pair");
  for (const BlockField& bf : f)
    if (!bf.value || !bf.jacobian) fail(ErrorCode::BadShape, "block fields need value and jacobian");
  auto blocks = std::make_shared<std::vector<BlockField>>(std::move(f));
  VectorFn field = [blocks, m](std::span<const double> x) {
    std::vector<double> out(2 * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::array<double, 2> v = (*blocks)[i].value(x[2 * i], x[2 * i + 1]);
      out[2 * i] = v[0];
      out[2 * i + 1] = v[1];
    }
    return out;
  };
  MatrixFn jac = [blocks, m](std::span<const double> x) {
    DenseMatrix j(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::array<double, 4> b = (*blocks)[i].jacobian(x[2 * i], x[2 * i + 1]);
      j(2 * i, 2 * i) = b[0];
      j(2 * i, 2 * i + 1) = b[1];
      j(2 * i + 1, 2 * i) = b[2];
      j(2 * i + 1, 2 * i + 1) = b[3];
    }
    return j;
  };
  return {std::move(field), std::move(jac)};
}

DenseMatrix pairwise_m(std::size_t m, double alpha, double beta1, double beta2) {
  const std::size_t n = 2 * m;
  DenseMatrix big_m(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    big_m(2 * i, 2 * i) = alpha * alpha + beta2;
    big_m(2 * i + 1, 2 * i + 1) = alpha * alpha - beta2;
    big_m(2 * i, 2 * i + 1) = beta1;
    big_m(2 * i + 1, 2 * i) = beta1;
  }
  return big_m;
}

DenseMatrix pairwise_a(std::size_t m, double gamma) {
  const std::size_t n = 2 * m;
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    a(2 * i, 2 * i + 1) = -gamma / 2.0;
    a(2 * i + 1, 2 * i) = gamma / 2.0;
  }
  return a;
}

std::vector<double> two_fold_eigs(std::size_t m, double lo, double hi) {
  std::vector<double> v;
  v.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) v.push_back(std::max(lo, hi));
  for (std::size_t i = 0; i < m; ++i) v.push_back(std::min(lo, hi));
  return v;
}

}  // namespace

RepresentationBundle build_pairwise(std::size_t m, double gamma, double alpha, std::vector<BlockField> f) {
  if (m < 1) fail(ErrorCode::BadShape, "pairwise representation needs m >= 1");
  auto [field, jac] = assemble_block_field(m, std::move(f));
  RepresentationBundle b;
  b.spec = make_system(2 * m, pairwise_m(m, alpha, 1.0, 0.0), pairwise_a(m, gamma), std::move(field),
                       std::move(jac));
  b.analytic_eigenvalues = two_fold_eigs(m, alpha * alpha - 1.0, alpha * alpha + 1.0);
  b.positive_definite = alpha * alpha > 1.0;
  b.label = "pairwise";
  return b;
}

RepresentationBundle build_beta_modified(std::size_t m, double gamma, double alpha, double beta1,
                                         double beta2, std::vector<BlockField> f) {
  if (m < 1) fail(ErrorCode::BadShape, "beta-modified representation needs m >= 1");
  auto [field, jac] = assemble_block_field(m, std::move(f));
  const double s = std::hypot(beta1, beta2);
  RepresentationBundle b;
  b.spec = make_system(2 * m, pairwise_m(m, alpha, beta1, beta2), pairwise_a(m, gamma), std::move(field),
                       std::move(jac));
  b.analytic_eigenvalues = two_fold_eigs(m, alpha * alpha - s, alpha * alpha + s);
  b.positive_definite = alpha * alpha > s;
  b.label = "beta_modified";
  return b;
}

RepresentationBundle build_appendix_rep1(std::size_t n, double p, double q, DenseMatrix a_mat) {
  if (n < 2) fail(ErrorCode::BadShape, "appendix representation I needs N >= 2");
  if (a_mat.rows() != n || a_mat.cols() != n || !a_mat.is_antisymmetric(tol::kSym))
    fail(ErrorCode::BadShape, "A must be an n x n antisymmetric matrix");
  DenseMatrix big_m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    big_m(i, i) = p;
    if (i + 1 < n) {
      big_m(i, i + 1) = q;
      big_m(i + 1, i) = q;
    }
  }
  RepresentationBundle b;
  b.spec = make_system(n, std::move(big_m), std::move(a_mat));
  for (std::size_t k = 1; k <= n; ++k)
    b.analytic_eigenvalues.push_back(p + 2.0 * q * std::cos(static_cast<double>(k) * std::numbers::pi /
                                                            static_cast<double>(n + 1)));
  std::sort(b.analytic_eigenvalues.rbegin(), b.analytic_eigenvalues.rend());
  b.positive_definite = p > 2.0 * std::abs(q);
  b.label = "appendix1";
  return b;
}

RepresentationBundle build_appendix_rep2(std::size_t n, double p, double q, DenseMatrix a_mat) {
  if (n < 2) fail(ErrorCode::BadShape, "appendix representation II needs N >= 2");
  if (a_mat.rows() != n || a_mat.cols() != n || !a_mat.is_antisymmetric(tol::kSym))
    fail(ErrorCode::BadShape, "A must be an n x n antisymmetric matrix");
  DenseMatrix big_m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) big_m(i, j) = (i == j) ? p : q;
  RepresentationBundle b;
  b.spec = make_system(n, std::move(big_m), std::move(a_mat));
  b.analytic_eigenvalues.assign(n - 1, p - q);
  b.analytic_eigenvalues.push_back(p + static_cast<double>(n - 1) * q);
  std::sort(b.analytic_eigenvalues.rbegin(), b.analytic_eigenvalues.rend());
  b.positive_definite = p > 0.0 && q < p && q > -p / static_cast<double>(n - 1);
  b.label = "appendix2";
  return b;
}

RepresentationBundle build_landau(double b_field, double c, double gamma) {
  DenseMatrix big_m = DenseMatrix::from_real(2, 2,
                                             {0.5 * (b_field + c), 0.5 * gamma,
                                              0.5 * gamma, 0.5 * (b_field - c)});
  DenseMatrix a = DenseMatrix::from_real(2, 2, {0.0, 0.5, -0.5, 0.0});
  const double delta = std::hypot(c, gamma);
  RepresentationBundle b;
  b.spec.n = 2;  // assembled directly: the singular boundary B = +-Delta is rejected downstream
  b.spec.big_m = std::move(big_m);
  b.spec.a_mat = std::move(a);
  b.analytic_eigenvalues = {0.5 * (b_field + delta), 0.5 * (b_field - delta)};
  b.positive_definite = b_field > delta;
  b.label = "landau";
  return b;
}

DenseMatrix appendix_rep1_d(std::size_t n, double p, double q, const DenseMatrix& r) {
  DenseMatrix d(n, n);
  auto rget = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> Complex {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(n) || j >= static_cast<std::ptrdiff_t>(n))
      return Complex{0.0, 0.0};
    return r(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j)
      d(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          p * rget(i, j) + q * (rget(i + 1, j) + rget(i - 1, j));
  return d;
}

DenseMatrix appendix_rep1_o(std::size_t n) {
  DenseMatrix o(n, n);
  const double norm = std::sqrt(2.0 / static_cast<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      o(i, j) = norm * std::sin(static_cast<double>((i + 1) * (j + 1)) * std::numbers::pi /
                                static_cast<double>(n + 1));
  return o;
}

std::pair<DenseMatrix, DenseMatrix> appendix_rep2_d_split(std::size_t n, double p, double q,
                                                          const DenseMatrix& r) {
  DenseMatrix ds(n, n), da(n, n);
  std::vector<Complex> colsum(n, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) colsum[j] += r(k, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ds(i, j) = 0.5 * q * (colsum[j] + colsum[i]);
      da(i, j) = (p - q) * r(i, j) + 0.5 * q * (colsum[j] - colsum[i]);
    }
  }
  return {std::move(ds), std::move(da)};
}

}  // namespace lossgain
