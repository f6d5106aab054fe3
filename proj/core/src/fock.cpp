#include "lossgain/fock.hpp"

#include <cmath>

#include "lossgain/errors.hpp"

namespace lossgain {

namespace {

// z index -> (mode, is_momentum) for z = (x1, x2, p1, p2)
constexpr int kMode[4] = {0, 1, 0, 1};
constexpr bool kIsP[4] = {false, false, true, true};

// H += coeff * (A on mode 0) kron (B on mode 1)
void add_kron(DenseMatrix& h, const DenseMatrix& a, const DenseMatrix& b, Complex coeff) {
  const std::size_t n = a.rows();
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      const Complex aij = coeff * a(i1, j1);
      if (aij == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          const Complex bij = b(i2, j2);
          if (bij == Complex{}) continue;
          h(i1 * n + i2, j1 * n + j2) += aij * bij;
        }
    }
}

}  // namespace

DenseMatrix mode_x(std::size_t n_max) {
  const std::size_t n = n_max + 1;
  DenseMatrix m(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double v = std::sqrt(static_cast<double>(k) / 2.0);
    m(k - 1, k) = v;
    m(k, k - 1) = v;
  }
  return m;
}

DenseMatrix mode_p(std::size_t n_max) {
  const std::size_t n = n_max + 1;
  DenseMatrix m(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double v = std::sqrt(static_cast<double>(k) / 2.0);
    m(k - 1, k) = Complex{0.0, -v};
    m(k, k - 1) = Complex{0.0, v};
  }
  return m;
}

DenseMatrix mode_x2(std::size_t n_max) {
  // x^2 = (c^2 + c_dag^2 + 2 n + 1)/2
  const std::size_t n = n_max + 1;
  DenseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = static_cast<double>(k) + 0.5;
  for (std::size_t k = 2; k < n; ++k) {
    const double v = 0.5 * std::sqrt(static_cast<double>(k * (k - 1)));
    m(k - 2, k) = v;
    m(k, k - 2) = v;
  }
  return m;
}

DenseMatrix mode_p2(std::size_t n_max) {
  const std::size_t n = n_max + 1;
  DenseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = static_cast<double>(k) + 0.5;
  for (std::size_t k = 2; k < n; ++k) {
    const double v = -0.5 * std::sqrt(static_cast<double>(k * (k - 1)));
    m(k - 2, k) = v;
    m(k, k - 2) = v;
  }
  return m;
}

DenseMatrix mode_xp_sym(std::size_t n_max) {
  // (xp + px)/2 = (i/2)(c_dag^2 - c^2)
  const std::size_t n = n_max + 1;
  DenseMatrix m(n, n);
  for (std::size_t k = 2; k < n; ++k) {
    const double v = 0.5 * std::sqrt(static_cast<double>(k * (k - 1)));
    m(k - 2, k) = Complex{0.0, -v};
    m(k, k - 2) = Complex{0.0, v};
  }
  return m;
}

FockOperator fock_matrix(const PhaseOperator& op, std::size_t n_max) {
  if (n_max < 1) fail(ErrorCode::BadShape, "fock_matrix needs n_max >= 1");
  const std::size_t n = n_max + 1;
  const std::size_t dim = n * n;
  const DenseMatrix eye = DenseMatrix::identity(n);
  const DenseMatrix mx = mode_x(n_max);
  const DenseMatrix mp = mode_p(n_max);
  const DenseMatrix mx2 = mode_x2(n_max);
  const DenseMatrix mp2 = mode_p2(n_max);
  const DenseMatrix mxp = mode_xp_sym(n_max);

  auto single = [&](int zi) -> const DenseMatrix& { return kIsP[zi] ? mp : mx; };
  auto pair_same_mode = [&](int zi, int zj) -> const DenseMatrix& {
    if (kIsP[zi] && kIsP[zj]) return mp2;
    if (!kIsP[zi] && !kIsP[zj]) return mx2;
    return mxp;
  };

  FockOperator out;
  out.n_max = n_max;
  out.matrix = DenseMatrix(dim, dim);
  if (op.constant != Complex{})
    for (std::size_t i = 0; i < dim; ++i) out.matrix(i, i) += op.constant;

  for (int zi = 0; zi < 4; ++zi) {
    if (op.linear[zi] == Complex{}) continue;
    if (kMode[zi] == 0)
      add_kron(out.matrix, single(zi), eye, op.linear[zi]);
    else
      add_kron(out.matrix, eye, single(zi), op.linear[zi]);
  }

  for (int zi = 0; zi < 4; ++zi) {
    for (int zj = 0; zj < 4; ++zj) {
      const Complex q = op.quad[zi][zj];
      if (q == Complex{}) continue;
      if (kMode[zi] == kMode[zj]) {
        const DenseMatrix& m2 = pair_same_mode(zi, zj);
        if (kMode[zi] == 0)
          add_kron(out.matrix, m2, eye, q);
        else
          add_kron(out.matrix, eye, m2, q);
      } else if (kMode[zi] == 0) {
        add_kron(out.matrix, single(zi), single(zj), q);
      } else {
        add_kron(out.matrix, single(zj), single(zi), q);
      }
    }
  }
  return out;
}

Spectrum spectrum(const FockOperator& h, std::size_t k, double level_tol) {
  if (!h.matrix.is_hermitian()) fail(ErrorCode::NotHermitian, "spectrum requires a Hermitian operator");
  std::vector<double> ev = eig_herm_values(h.matrix);
  Spectrum out;
  const std::size_t kk = std::min(k, ev.size());
  out.eigenvalues.assign(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(kk));

  double cluster_top = 0.0;
  for (double e : out.eigenvalues) {
    if (!out.levels.empty() && e - cluster_top <= level_tol) {
      SpectrumLevel& last = out.levels.back();
      last.energy = (last.energy * last.degeneracy + e) / (last.degeneracy + 1);
      ++last.degeneracy;
    } else {
      out.levels.push_back({e, 1});
    }
    cluster_top = e;
  }
  out.truncation_warning = out.levels.size() > static_cast<std::size_t>(h.n_max) / 3 + 1;
  return out;
}

int count_within(const std::vector<double>& eigenvalues, double target, double window) {
  int c = 0;
  for (double e : eigenvalues)
    if (std::abs(e - target) <= window) ++c;
  return c;
}

}  // namespace lossgain
