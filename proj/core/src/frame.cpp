#include "lossgain/frame.hpp"

#include <cmath>

#include "lossgain/errors.hpp"

namespace lossgain {

RegionReport classify(const DenseMatrix& big_m, double det_tol_rel) {
  const EigSym e = eig_sym(big_m);
  const double cut = det_tol_rel * std::max(1.0, big_m.max_norm());
  RegionReport rep;
  rep.eigenvalues = e.values;
  rep.signs.reserve(e.values.size());
  int negatives = 0;
  for (double l : e.values) {
    if (std::abs(l) < cut)
      fail(ErrorCode::SingularM, "eigenvalue on a region boundary: kinetic matrix is singular");
    const int s = l > 0.0 ? 1 : -1;
    rep.signs.push_back(s);
    if (s < 0) ++negatives;
  }
  rep.region_index = negatives + 1;
  rep.eta = DenseMatrix(big_m.rows(), big_m.cols());
  for (std::size_t i = 0; i < big_m.rows(); ++i) rep.eta(i, i) = rep.signs[i];
  return rep;
}

CanonicalFrame build_frame_from(const DenseMatrix& big_m, const DenseMatrix& r_mat) {
  const EigSym e = eig_sym(big_m);
  const RegionReport rep = classify(big_m);

  DenseMatrix o = e.vectors;
  // det(O) = product of eigenvalue signs of the rotation decomposition; a
  // reflection is turned into a rotation by flipping the last column.
  {
    // determinant via the real part using Jacobi on O^T O is overkill; expand
    // with Gaussian elimination on a small real copy.
    const std::size_t n = o.rows();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = o(i, j).real();
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
        det = -det;
      }
      det *= a[c * n + c];
      if (a[c * n + c] == 0.0) break;
      for (std::size_t r = c + 1; r < n; ++r) {
        const double f = a[r * n + c] / a[c * n + c];
        for (std::size_t j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
      }
    }
    if (det < 0.0)
      for (std::size_t i = 0; i < n; ++i) o(i, n - 1) = -o(i, n - 1);
  }

  CanonicalFrame f;
  f.eigenvalues = e.values;
  f.region_index = rep.region_index;
  f.eta = rep.eta;
  f.o_mat = std::move(o);
  const std::size_t n = big_m.rows();
  f.s_mat = DenseMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) f.s_mat(i, i) = std::sqrt(std::abs(e.values[i]));
  const DenseMatrix rot = f.o_mat.transpose() * r_mat * f.o_mat;
  f.r_cal = DenseMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      f.r_cal(i, j) = rot(i, j) * std::sqrt(std::abs(e.values[i]) * std::abs(e.values[j]));
  return f;
}

CanonicalFrame build_frame(const SystemSpec& spec, std::span<const double> at) {
  const DerivedMatrices dm = derive_matrices(spec, at);
  return build_frame_from(spec.big_m, dm.r_mat);
}

std::pair<std::vector<double>, std::vector<double>> to_frame(const CanonicalFrame& f,
                                                             std::span<const double> x,
                                                             std::span<const double> p) {
  const std::size_t n = f.o_mat.rows();
  std::vector<double> cx(n, 0.0), cp(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double si = f.s_mat(i, i).real();
    for (std::size_t j = 0; j < n; ++j) {
      const double oji = f.o_mat(j, i).real();
      cx[i] += oji * x[j] / si;
      cp[i] += oji * p[j] * si;
    }
  }
  return {std::move(cx), std::move(cp)};
}

std::pair<std::vector<double>, std::vector<double>> from_frame(const CanonicalFrame& f,
                                                               std::span<const double> cx,
                                                               std::span<const double> cp) {
  const std::size_t n = f.o_mat.rows();
  std::vector<double> x(n, 0.0), p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double oij = f.o_mat(i, j).real();
      const double sj = f.s_mat(j, j).real();
      x[i] += oij * sj * cx[j];
      p[i] += oij * cp[j] / sj;
    }
  }
  return {std::move(x), std::move(p)};
}

std::vector<double> position_to_frame(const CanonicalFrame& f, std::span<const double> x) {
  const std::size_t n = f.o_mat.rows();
  std::vector<double> cx(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cx[i] += f.o_mat(j, i).real() * x[j] / f.s_mat(i, i).real();
  return cx;
}

std::vector<double> position_from_frame(const CanonicalFrame& f, std::span<const double> cx) {
  const std::size_t n = f.o_mat.rows();
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      x[i] += f.o_mat(i, j).real() * f.s_mat(j, j).real() * cx[j];
  return x;
}

}  // namespace lossgain
