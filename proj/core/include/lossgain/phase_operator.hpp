#pragma once

/// Exact degree-<=2 operator algebra over the canonical variables
/// z = (x1, x2, p1, p2) with [x_j, p_j] = i.  Quadratic coefficients are kept
/// as a symmetric (Weyl-ordered) matrix, so operator identities reduce to
/// coefficient arithmetic: products of linears close with a commutator
/// constant, commutators of quadratics close at degree two, and no
/// truncation enters anywhere.  This algebra, not the Fock backend, is the
/// primary verification path for ladder and supersymmetry identities.

#include <array>
#include <complex>

#include "lossgain/landau.hpp"
#include "lossgain/matrix.hpp"

namespace lossgain {

struct PhaseOperator {
  Complex constant{};
  std::array<Complex, 4> linear{};                 // coefficients of (x1, x2, p1, p2)
  std::array<std::array<Complex, 4>, 4> quad{{}};  // symmetric; operator is sum_ij q_ij z_i z_j

  static PhaseOperator zero() { return {}; }
  static PhaseOperator constant_op(Complex c);
  static PhaseOperator x1();
  static PhaseOperator x2();
  static PhaseOperator p1();
  static PhaseOperator p2();
  static PhaseOperator linear_op(const std::array<Complex, 4>& coeffs, Complex c = {});

  int degree() const;  // 0, 1, or 2
  double max_abs_coeff() const;
  bool is_zero(double atol = 1e-14) const;
  bool is_hermitian(double atol = 1e-12) const;  // all coefficients real

  PhaseOperator& operator+=(const PhaseOperator& o);
  PhaseOperator& operator-=(const PhaseOperator& o);
  PhaseOperator& operator*=(Complex s);
};

PhaseOperator operator+(PhaseOperator a, const PhaseOperator& b);
PhaseOperator operator-(PhaseOperator a, const PhaseOperator& b);
PhaseOperator operator*(Complex s, PhaseOperator a);
PhaseOperator operator*(double s, PhaseOperator a);

PhaseOperator adjoint(const PhaseOperator& a);

/// Operator product; defined whenever the result stays at degree <= 2
/// (constants times anything, linear times linear).  The product of two
/// linears is the Weyl-symmetric quadratic plus half their commutator.
/// Throws DegreeOverflow otherwise.
PhaseOperator product(const PhaseOperator& a, const PhaseOperator& b);

/// Exact commutator, closed for (lin,lin) -> constant, (quad,lin) -> linear,
/// (quad,quad) -> quadratic.  Throws DegreeOverflow for unsupported pairs.
PhaseOperator commutator(const PhaseOperator& a, const PhaseOperator& b);

/// Anticommutator; defined when the result stays at degree <= 2.
PhaseOperator anticommutator(const PhaseOperator& a, const PhaseOperator& b);

/// Generalized momenta Pi = P + (1/2) R X of the Landau representation.
PhaseOperator big_pi_1();
PhaseOperator big_pi_2();
/// Frame momenta Pihat = S O^T Pi expressed in the original variables.
PhaseOperator pi_hat_1(const LandauParams& p);
PhaseOperator pi_hat_2(const LandauParams& p);

struct LadderSet {
  PhaseOperator a, a_dag;    // lower/raise the energy
  PhaseOperator b, b_dag;    // move within a degenerate level
  PhaseOperator h;           // H^I = |omega| (a_dag a + 1/2)
  PhaseOperator j3_frame;    // calJ3 = b_dag b - a_dag a
  PhaseOperator j3;          // x1 p2 - x2 p1
  Complex xi{};              // sqrt(2/|omega|) (sqrt(l+) + i sqrt(l-))
};

/// Ladder operators of the Region-I Landau level problem for C = 0; the
/// printed xi-forms require both.  Throws RegionMismatch.
LadderSet build_ladder(const LandauParams& p);

}  // namespace lossgain
