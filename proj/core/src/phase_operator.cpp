#include "lossgain/phase_operator.hpp"

#include <cmath>

#include "lossgain/errors.hpp"

namespace lossgain {

namespace {

// Symplectic form: [z_i, z_j] = i Omega_ij for z = (x1, x2, p1, p2).
constexpr double kOmega[4][4] = {
    {0.0, 0.0, 1.0, 0.0},
    {0.0, 0.0, 0.0, 1.0},
    {-1.0, 0.0, 0.0, 0.0},
    {0.0, -1.0, 0.0, 0.0},
};

std::array<Complex, 4> omega_apply(const std::array<Complex, 4>& v) {
  std::array<Complex, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += kOmega[i][j] * v[j];
  return out;
}

Complex dot(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  Complex s{};
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

PhaseOperator PhaseOperator::constant_op(Complex c) {
  PhaseOperator o;
  o.constant = c;
  return o;
}

PhaseOperator PhaseOperator::linear_op(const std::array<Complex, 4>& coeffs, Complex c) {
  PhaseOperator o;
  o.linear = coeffs;
  o.constant = c;
  return o;
}

PhaseOperator PhaseOperator::x1() { return linear_op({1.0, 0.0, 0.0, 0.0}); }
PhaseOperator PhaseOperator::x2() { return linear_op({0.0, 1.0, 0.0, 0.0}); }
PhaseOperator PhaseOperator::p1() { return linear_op({0.0, 0.0, 1.0, 0.0}); }
PhaseOperator PhaseOperator::p2() { return linear_op({0.0, 0.0, 0.0, 1.0}); }

int PhaseOperator::degree() const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (quad[i][j] != Complex{}) return 2;
  for (int i = 0; i < 4; ++i)
    if (linear[i] != Complex{}) return 1;
  return 0;
}

double PhaseOperator::max_abs_coeff() const {
  double m = std::abs(constant);
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(linear[i]));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(quad[i][j]));
  return m;
}

bool PhaseOperator::is_zero(double atol) const { return max_abs_coeff() <= atol; }

bool PhaseOperator::is_hermitian(double atol) const {
  if (std::abs(constant.imag()) > atol) return false;
  for (int i = 0; i < 4; ++i)
    if (std::abs(linear[i].imag()) > atol) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(quad[i][j].imag()) > atol) return false;
  return true;
}

PhaseOperator& PhaseOperator::operator+=(const PhaseOperator& o) {
  constant += o.constant;
  for (int i = 0; i < 4; ++i) linear[i] += o.linear[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) quad[i][j] += o.quad[i][j];
  return *this;
}

PhaseOperator& PhaseOperator::operator-=(const PhaseOperator& o) {
  constant -= o.constant;
  for (int i = 0; i < 4; ++i) linear[i] -= o.linear[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) quad[i][j] -= o.quad[i][j];
  return *this;
}

PhaseOperator& PhaseOperator::operator*=(Complex s) {
  constant *= s;
  for (int i = 0; i < 4; ++i) linear[i] *= s;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) quad[i][j] *= s;
  return *this;
}

PhaseOperator operator+(PhaseOperator a, const PhaseOperator& b) { return a += b; }
PhaseOperator operator-(PhaseOperator a, const PhaseOperator& b) { return a -= b; }
PhaseOperator operator*(Complex s, PhaseOperator a) { return a *= s; }
PhaseOperator operator*(double s, PhaseOperator a) { return a *= Complex{s, 0.0}; }

PhaseOperator adjoint(const PhaseOperator& a) {
  PhaseOperator o = a;
  o.constant = std::conj(o.constant);
  for (int i = 0; i < 4; ++i) o.linear[i] = std::conj(o.linear[i]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) o.quad[i][j] = std::conj(a.quad[i][j]);
  return o;
}

PhaseOperator product(const PhaseOperator& a, const PhaseOperator& b) {
  const int da = a.degree(), db = b.degree();
  if (da + db > 2)
    fail(ErrorCode::DegreeOverflow, "operator product would exceed degree 2");
  PhaseOperator out;
  out.constant = a.constant * b.constant;
  for (int i = 0; i < 4; ++i) out.linear[i] = a.constant * b.linear[i] + b.constant * a.linear[i];
  if (da == 2) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.quad[i][j] += b.constant * a.quad[i][j];
  }
  if (db == 2) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.quad[i][j] += a.constant * b.quad[i][j];
  }
  if (da == 1 && db == 1) {
    // L1 L2 = Sym(L1 L2) + (1/2)[L1, L2]
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.quad[i][j] += 0.5 * (a.linear[i] * b.linear[j] + a.linear[j] * b.linear[i]);
    out.constant += Complex{0.0, 0.5} * dot(a.linear, omega_apply(b.linear));
  }
  return out;
}

PhaseOperator commutator(const PhaseOperator& a, const PhaseOperator& b) {
  const int da = a.degree(), db = b.degree();
  PhaseOperator out;
  if (da == 0 || db == 0) return out;
  if (da == 1 && db == 1) {
    out.constant = Complex{0.0, 1.0} * dot(a.linear, omega_apply(b.linear));
    return out;
  }
  if (da == 2 && db == 1) {
    // [q, l] = 2i Q Omega l  (linear)
    const std::array<Complex, 4> ol = omega_apply(b.linear);
    for (int i = 0; i < 4; ++i) {
      Complex s{};
      for (int j = 0; j < 4; ++j) s += a.quad[i][j] * ol[j];
      out.linear[i] = Complex{0.0, 2.0} * s;
    }
    // the linear remainder of `a` commutes into a constant
    PhaseOperator alin;
    alin.linear = a.linear;
    out += commutator(alin, b);
    return out;
  }
  if (da == 1 && db == 2) {
    out = commutator(b, a);
    return -1.0 * out;
  }
  if (da == 2 && db == 2) {
    // [P, Q] = 2i (P Omega Q - Q Omega P) as a symmetric quadratic form
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        Complex s{};
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l)
            s += a.quad[i][k] * kOmega[k][l] * b.quad[l][j] - b.quad[i][k] * kOmega[k][l] * a.quad[l][j];
        out.quad[i][j] = Complex{0.0, 2.0} * s;
      }
    }
    PhaseOperator alin, blin;
    alin.linear = a.linear;
    blin.linear = b.linear;
    PhaseOperator aq = a, bq = b;
    aq.linear = {};
    aq.constant = {};
    bq.linear = {};
    bq.constant = {};
    out += commutator(aq, blin);
    out += commutator(alin, bq);
    out += commutator(alin, blin);
    return out;
  }
  fail(ErrorCode::DegreeOverflow, "commutator undefined for this degree combination");
}

PhaseOperator anticommutator(const PhaseOperator& a, const PhaseOperator& b) {
  const int da = a.degree(), db = b.degree();
  if (da + db > 2)
    fail(ErrorCode::DegreeOverflow, "anticommutator would exceed degree 2");
  return product(a, b) + product(b, a);
}

PhaseOperator big_pi_1() {
  // Pi = P + (1/2) R X with R = [[0,1],[-1,0]]: Pi1 = p1 + x2/2
  return PhaseOperator::linear_op({0.0, 0.5, 1.0, 0.0});
}

PhaseOperator big_pi_2() { return PhaseOperator::linear_op({-0.5, 0.0, 0.0, 1.0}); }

PhaseOperator pi_hat_1(const LandauParams& p) {
  const double ct = std::cos(p.theta), st = std::sin(p.theta);
  const double sp = std::sqrt(std::abs(p.lambda_plus));
  // Pihat = S O^T Pi: row 1 = sqrt|l+| (cos, sin) . (Pi1, Pi2)
  PhaseOperator o = Complex{sp * ct, 0.0} * big_pi_1();
  o += Complex{sp * st, 0.0} * big_pi_2();
  return o;
}

PhaseOperator pi_hat_2(const LandauParams& p) {
  const double ct = std::cos(p.theta), st = std::sin(p.theta);
  const double sm = std::sqrt(std::abs(p.lambda_minus));
  PhaseOperator o = Complex{-sm * st, 0.0} * big_pi_1();
  o += Complex{sm * ct, 0.0} * big_pi_2();
  return o;
}

LadderSet build_ladder(const LandauParams& p) {
  if (p.region != Region::I) fail(ErrorCode::RegionMismatch, "ladder operators are built in Region I");
  if (p.c != 0.0) fail(ErrorCode::RegionMismatch, "printed xi-forms require C = 0");
  LadderSet L;
  const double w = p.abs_omega;
  const Complex xi = std::sqrt(2.0 / w) * Complex{std::sqrt(p.lambda_plus), std::sqrt(p.lambda_minus)};
  L.xi = xi;

  const PhaseOperator up = PhaseOperator::linear_op({0.0, 0.5, 1.0, 0.0});    // p1 + x2/2
  const PhaseOperator um = PhaseOperator::linear_op({0.0, -0.5, 1.0, 0.0});   // p1 - x2/2
  const PhaseOperator vp = PhaseOperator::linear_op({0.5, 0.0, 0.0, 1.0});    // p2 + x1/2
  const PhaseOperator vm = PhaseOperator::linear_op({-0.5, 0.0, 0.0, 1.0});   // p2 - x1/2

  L.a = 0.5 * (std::conj(xi) * up + xi * vm);
  L.a_dag = 0.5 * (xi * up + std::conj(xi) * vm);
  L.b = 0.5 * (xi * um + std::conj(xi) * vp);
  L.b_dag = 0.5 * (std::conj(xi) * um + xi * vp);
  L.h = w * (product(L.a_dag, L.a) + PhaseOperator::constant_op(0.5));
  L.j3_frame = product(L.b_dag, L.b) - product(L.a_dag, L.a);
  L.j3 = product(PhaseOperator::x1(), PhaseOperator::p2()) - product(PhaseOperator::x2(), PhaseOperator::p1());
  return L;
}

}  // namespace lossgain
