#pragma once

/// Small dense matrix kernel: complex entries in row-major order, with real
/// matrices as the real-valued special case.  Provides the products, traces,
/// (anti)commutators and the symmetric eigendecomposition the rest of the
/// library is built on.  Everything is value-semantic and sized for small
/// systems (N up to a few thousand), not for sparse or large-scale work.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lossgain {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double kSym = 1e-10;   // symmetry / antisymmetry / hermiticity
inline constexpr double kOrth = 1e-10;  // orthogonality of eigenvector matrices
inline constexpr double kAlg = 1e-10;   // generic algebraic identities
inline constexpr double kDetRel = 1e-10;  // singularity threshold relative to max-norm
}  // namespace tol

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix zero(std::size_t rows, std::size_t cols);
  static DenseMatrix diag(std::span<const double> entries);
  /// Row-major construction from real values.
  static DenseMatrix from_real(std::size_t rows, std::size_t cols, std::initializer_list<double> vals);
  static DenseMatrix from_complex(std::size_t rows, std::size_t cols, std::initializer_list<Complex> vals);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return e_; }
  std::span<Complex> entries() noexcept { return e_; }

  DenseMatrix transpose() const;
  DenseMatrix adjoint() const;
  DenseMatrix real_part() const;
  Complex trace() const;
  double max_norm() const;  // max |entry|

  bool is_real(double atol) const;
  /// ||M^T - M||_max <= atol_rel * max(1, ||M||_max)
  bool is_symmetric(double atol_rel = tol::kSym) const;
  bool is_antisymmetric(double atol_rel = tol::kSym) const;
  bool is_hermitian(double atol_rel = tol::kSym) const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> e_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex s, DenseMatrix a);
DenseMatrix operator*(double s, DenseMatrix a);

/// ab - ba and ab + ba.  Throws ShapeMismatch unless both are square and conformable.
DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix anticommutator(const DenseMatrix& a, const DenseMatrix& b);

/// y = M x for a real matrix applied to a real vector.
std::vector<double> apply_real(const DenseMatrix& m, std::span<const double> x);

struct EigSym {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // orthogonal, columns are eigenvectors
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.  Eigenvalues are
/// returned in descending order; each eigenvector is normalized so that its
/// first component of non-negligible size is positive, which keeps downstream
/// rotation angles reproducible.  Throws NotSymmetric when the input fails the
/// symmetry test, including any complex entries.
EigSym eig_sym(const DenseMatrix& m, double sym_tol = tol::kSym);

/// Determinant of a real symmetric matrix (product of Jacobi eigenvalues).
double det_sym(const DenseMatrix& m, double sym_tol = tol::kSym);

/// Eigenvalues of a Hermitian matrix, ascending.  Householder reduction to a
/// real tridiagonal followed by implicit-shift QL; suitable for the Fock-space
/// matrices whose dimension runs to a few thousand.  Throws NotHermitian.
std::vector<double> eig_herm_values(const DenseMatrix& m, double herm_tol = tol::kSym);

}  // namespace lossgain
