#include "lossgain/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lossgain/errors.hpp"

namespace lossgain {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Complex{0.0, 0.0}) {
  if (rows == 0 || cols == 0) fail(ErrorCode::BadShape, "matrix dimensions must be >= 1");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::zero(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }

DenseMatrix DenseMatrix::diag(std::span<const double> entries) {
  DenseMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

DenseMatrix DenseMatrix::from_real(std::size_t rows, std::size_t cols, std::initializer_list<double> vals) {
  if (vals.size() != rows * cols) fail(ErrorCode::BadShape, "entry count does not match shape");
  DenseMatrix m(rows, cols);
  std::size_t k = 0;
  for (double v : vals) m.e_[k++] = v;
  return m;
}

DenseMatrix DenseMatrix::from_complex(std::size_t rows, std::size_t cols, std::initializer_list<Complex> vals) {
  if (vals.size() != rows * cols) fail(ErrorCode::BadShape, "entry count does not match shape");
  DenseMatrix m(rows, cols);
  std::size_t k = 0;
  for (Complex v : vals) m.e_[k++] = v;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

DenseMatrix DenseMatrix::real_part() const {
  DenseMatrix t(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) t.e_[k] = e_[k].real();
  return t;
}

Complex DenseMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::max_norm() const {
  double m = 0.0;
  for (const Complex& v : e_) m = std::max(m, std::abs(v));
  return m;
}

bool DenseMatrix::is_real(double atol) const {
  for (const Complex& v : e_)
    if (std::abs(v.imag()) > atol) return false;
  return true;
}

bool DenseMatrix::is_symmetric(double atol_rel) const {
  if (!square()) return false;
  const double scale = std::max(1.0, max_norm());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > atol_rel * scale) return false;
  return true;
}

bool DenseMatrix::is_antisymmetric(double atol_rel) const {
  if (!square()) return false;
  const double scale = std::max(1.0, max_norm());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) + (*this)(j, i)) > atol_rel * scale) return false;
  return true;
}

bool DenseMatrix::is_hermitian(double atol_rel) const {
  if (!square()) return false;
  const double scale = std::max(1.0, max_norm());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > atol_rel * scale) return false;
  return true;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix addition shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix subtraction shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex s) {
  for (Complex& v : e_) v *= s;
  return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
DenseMatrix operator*(double s, DenseMatrix a) { return a *= Complex{s, 0.0}; }

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    fail(ErrorCode::ShapeMismatch, "commutator requires conformable square matrices");
  return a * b - b * a;
}

DenseMatrix anticommutator(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    fail(ErrorCode::ShapeMismatch, "anticommutator requires conformable square matrices");
  return a * b + b * a;
}

std::vector<double> apply_real(const DenseMatrix& m, std::span<const double> x) {
  if (m.cols() != x.size()) fail(ErrorCode::ShapeMismatch, "apply_real shape mismatch");
  std::vector<double> y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j).real() * x[j];
  return y;
}

namespace {

// Deterministic sign: first component whose size is non-negligible is made positive.
void fix_column_signs(DenseMatrix& v) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double colmax = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i) colmax = std::max(colmax, std::abs(v(i, j)));
    for (std::size_t i = 0; i < v.rows(); ++i) {
      const double x = v(i, j).real();
      if (std::abs(x) > 1e-12 * colmax) {
        if (x < 0.0)
          for (std::size_t k = 0; k < v.rows(); ++k) v(k, j) = -v(k, j);
        break;
      }
    }
  }
}

}  // namespace

EigSym eig_sym(const DenseMatrix& m, double sym_tol) {
  if (!m.square()) fail(ErrorCode::NotSymmetric, "eig_sym requires a square matrix");
  if (!m.is_real(sym_tol * std::max(1.0, m.max_norm())) || !m.is_symmetric(sym_tol))
    fail(ErrorCode::NotSymmetric, "eig_sym requires a real symmetric matrix");

  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (m(i, j).real() + m(j, i).real());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
  };

  const double stop = 1e-15 * std::max(1.0, m.max_norm()) * static_cast<double>(n);
  for (int sweep = 0; sweep < 64 && off_norm() > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= 1e-300) continue;
        const double app = a[p * n + p], aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

  EigSym out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a[order[j] * n + order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v[i * n + order[j]];
  }
  fix_column_signs(out.vectors);
  return out;
}

double det_sym(const DenseMatrix& m, double sym_tol) {
  const EigSym e = eig_sym(m, sym_tol);
  double d = 1.0;
  for (double l : e.values) d *= l;
  return d;
}

std::vector<double> eig_herm_values(const DenseMatrix& m, double herm_tol) {
  if (!m.is_hermitian(herm_tol)) fail(ErrorCode::NotHermitian, "eig_herm_values requires a Hermitian matrix");
  const std::size_t n = m.rows();
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

  std::vector<double> d(n), e(n, 0.0);
  std::vector<Complex> hv(n), p(n);

  // Householder reduction to Hermitian tridiagonal form, trailing block only.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale += std::norm(at(i, k));
    scale = std::sqrt(scale);
    const Complex x0 = at(k + 1, k);
    if (scale <= 1e-300) continue;
    const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex{1.0, 0.0};
    const Complex alpha = -phase * scale;

    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      hv[i] = at(i, k);
      if (i == k + 1) hv[i] -= alpha;
      vnorm2 += std::norm(hv[i]);
    }
    if (vnorm2 <= 1e-300) continue;
    const double tau = 2.0 / vnorm2;

    // p = tau * A v on the trailing block
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * hv[j];
      p[i] = tau * s;
    }
    Complex kconst = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) kconst += std::conj(hv[i]) * p[i];
    kconst *= 0.5 * tau;
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= kconst * hv[i];

    // A <- A - v p^dag - p v^dag
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) -= hv[i] * std::conj(p[j]) + p[i] * std::conj(hv[j]);
    }
    at(k + 1, k) = alpha;
    at(k, k + 1) = std::conj(alpha);
    for (std::size_t i = k + 2; i < n; ++i) {
      at(i, k) = 0.0;
      at(k, i) = 0.0;
    }
  }

  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(at(i + 1, i));

  // Implicit-shift QL on the real symmetric tridiagonal (d, e), values only.
  auto hypot2 = [](double x, double y) { return std::hypot(x, y); };
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      std::size_t mIdx = l;
      for (; mIdx + 1 < n; ++mIdx) {
        const double dd = std::abs(d[mIdx]) + std::abs(d[mIdx + 1]);
        if (std::abs(e[mIdx]) <= 1e-17 * dd) break;
      }
      if (mIdx == l) break;
      if (++iter > 64) fail(ErrorCode::NonFinite, "tridiagonal QL failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = hypot2(g, 1.0);
      g = d[mIdx] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
      double s = 1.0, c = 1.0, pp = 0.0;
      for (std::size_t i = mIdx; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = hypot2(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= pp;
          e[mIdx] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - pp;
        r = (d[i] - g) * s + 2.0 * c * b;
        pp = s * r;
        d[i + 1] = g + pp;
        g = c * r - b;
      }
      if (r == 0.0 && mIdx > l + 1) continue;
      d[l] -= pp;
      e[l] = g;
      e[mIdx] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace lossgain
