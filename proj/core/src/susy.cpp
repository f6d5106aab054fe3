#include "lossgain/susy.hpp"

#include <cmath>

#include "lossgain/errors.hpp"
#include "lossgain/fock.hpp"

namespace lossgain {

namespace {

struct SpinCoeffs {
  std::array<Complex, 4> c{};  // over {I, sx, sy, sz}
};

// Pauli products: sigma_i sigma_j = delta_ij I + i eps_ijk sigma_k (indices 1..3).
SpinCoeffs spin_product(int i, int j) {
  SpinCoeffs out;
  if (i == 0 || j == 0) {
    out.c[i + j] = 1.0;  // one of them is the identity
    return out;
  }
  if (i == j) {
    out.c[0] = 1.0;
    return out;
  }
  const int k = 6 - i - j;  // the remaining index
  // eps_{ijk}: (1,2,3) cyclic -> +1
  const bool cyclic = (j - i + 3) % 3 == 1;
  out.c[k] = Complex{0.0, cyclic ? 1.0 : -1.0};
  return out;
}

SpinCoeffs spin_anticommutator(int i, int j) {
  SpinCoeffs a = spin_product(i, j);
  const SpinCoeffs b = spin_product(j, i);
  for (int k = 0; k < 4; ++k) a.c[k] += b.c[k];
  return a;
}

SpinCoeffs spin_commutator(int i, int j) {
  SpinCoeffs a = spin_product(i, j);
  const SpinCoeffs b = spin_product(j, i);
  for (int k = 0; k < 4; ++k) a.c[k] -= b.c[k];
  return a;
}

}  // namespace

SpinPhaseOperator SpinPhaseOperator::from_spin(int pauli_index, const PhaseOperator& op) {
  SpinPhaseOperator s;
  s.comp[static_cast<std::size_t>(pauli_index)] = op;
  return s;
}

bool SpinPhaseOperator::is_zero(double atol) const {
  for (const PhaseOperator& p : comp)
    if (!p.is_zero(atol)) return false;
  return true;
}

double SpinPhaseOperator::max_abs_coeff() const {
  double m = 0.0;
  for (const PhaseOperator& p : comp) m = std::max(m, p.max_abs_coeff());
  return m;
}

SpinPhaseOperator& SpinPhaseOperator::operator+=(const SpinPhaseOperator& o) {
  for (int k = 0; k < 4; ++k) comp[k] += o.comp[k];
  return *this;
}

SpinPhaseOperator& SpinPhaseOperator::operator-=(const SpinPhaseOperator& o) {
  for (int k = 0; k < 4; ++k) comp[k] -= o.comp[k];
  return *this;
}

SpinPhaseOperator& SpinPhaseOperator::operator*=(Complex s) {
  for (int k = 0; k < 4; ++k) comp[k] *= s;
  return *this;
}

SpinPhaseOperator operator+(SpinPhaseOperator a, const SpinPhaseOperator& b) { return a += b; }
SpinPhaseOperator operator-(SpinPhaseOperator a, const SpinPhaseOperator& b) { return a -= b; }
SpinPhaseOperator operator*(Complex s, SpinPhaseOperator a) { return a *= s; }
SpinPhaseOperator operator*(double s, SpinPhaseOperator a) { return a *= Complex{s, 0.0}; }

SpinPhaseOperator anticommutator(const SpinPhaseOperator& a, const SpinPhaseOperator& b) {
  SpinPhaseOperator out;
  for (int i = 0; i < 4; ++i) {
    if (a.comp[i].is_zero(0.0)) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.comp[j].is_zero(0.0)) continue;
      const SpinCoeffs anti = spin_anticommutator(i, j);
      const SpinCoeffs comm = spin_commutator(i, j);
      for (int k = 0; k < 4; ++k) {
        if (anti.c[k] != Complex{})
          out.comp[k] += 0.5 * anti.c[k] * anticommutator(a.comp[i], b.comp[j]);
        if (comm.c[k] != Complex{})
          out.comp[k] += 0.5 * comm.c[k] * commutator(a.comp[i], b.comp[j]);
      }
    }
  }
  return out;
}

SpinPhaseOperator commutator(const SpinPhaseOperator& a, const SpinPhaseOperator& b) {
  SpinPhaseOperator out;
  for (int i = 0; i < 4; ++i) {
    if (a.comp[i].is_zero(0.0)) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.comp[j].is_zero(0.0)) continue;
      const SpinCoeffs anti = spin_anticommutator(i, j);
      const SpinCoeffs comm = spin_commutator(i, j);
      for (int k = 0; k < 4; ++k) {
        if (anti.c[k] != Complex{})
          out.comp[k] += 0.5 * anti.c[k] * commutator(a.comp[i], b.comp[j]);
        if (comm.c[k] != Complex{})
          out.comp[k] += 0.5 * comm.c[k] * anticommutator(a.comp[i], b.comp[j]);
      }
    }
  }
  return out;
}

namespace {

void require_region_one(const LandauParams& p) {
  if (p.region != Region::I)
    fail(ErrorCode::RegionMismatch, "supersymmetric extension exists in Region I only");
  if (p.c != 0.0) fail(ErrorCode::RegionMismatch, "Pauli loss-gain system assumes C = 0");
}

}  // namespace

SpinPhaseOperator build_pauli_hamiltonian(const LandauParams& p) {
  require_region_one(p);
  const PhaseOperator pi1 = big_pi_1();
  const PhaseOperator pi2 = big_pi_2();
  PhaseOperator orbital = 0.5 * p.b * (product(pi1, pi1) + product(pi2, pi2));
  orbital += 0.5 * p.gamma * anticommutator(pi1, pi2);
  SpinPhaseOperator h = SpinPhaseOperator::from_spin(0, orbital);
  h += SpinPhaseOperator::from_spin(3, PhaseOperator::constant_op(0.5 * p.abs_omega));
  return h;
}

SpinPhaseOperator build_pauli_hamiltonian_frame(const LandauParams& p) {
  require_region_one(p);
  const PhaseOperator ph1 = pi_hat_1(p);
  const PhaseOperator ph2 = pi_hat_2(p);
  SpinPhaseOperator h = SpinPhaseOperator::from_spin(0, product(ph1, ph1) + product(ph2, ph2));
  h += SpinPhaseOperator::from_spin(3, PhaseOperator::constant_op(0.5 * p.abs_omega));
  return h;
}

Supercharges build_supercharges(const LandauParams& p) {
  require_region_one(p);
  Supercharges s;
  const PhaseOperator ph1 = pi_hat_1(p);
  const PhaseOperator ph2 = pi_hat_2(p);
  s.q1 = SpinPhaseOperator::from_spin(1, ph1) - SpinPhaseOperator::from_spin(2, ph2);
  s.q2 = SpinPhaseOperator::from_spin(1, ph2) + SpinPhaseOperator::from_spin(2, ph1);

  // Mixing angle theta~ = -(1/2) arctan(gamma/|omega|).  With the rotation
  // convention fixed by our diagonalizer the algebra closes for the
  // combination below; the overall sign of theta~ is what the anticommutator
  // test pins down.
  s.theta_tilde = -0.5 * std::atan(p.gamma / p.abs_omega);
  const double ct = std::cos(s.theta_tilde), st = std::sin(s.theta_tilde);
  const double scale = std::sqrt(0.5 * p.b);
  const PhaseOperator pi1 = big_pi_1();
  const PhaseOperator pi2 = big_pi_2();
  // Q1 = sqrt(B/2) [ -(sx Pi1 + sy Pi2) sin(t~) + (sx Pi2 + sy Pi1) cos(t~) ]
  s.big_q1 = Complex{-scale * st, 0.0} *
                 (SpinPhaseOperator::from_spin(1, pi1) + SpinPhaseOperator::from_spin(2, pi2)) +
             Complex{scale * ct, 0.0} *
                 (SpinPhaseOperator::from_spin(1, pi2) + SpinPhaseOperator::from_spin(2, pi1));
  // Q2 = sqrt(B/2) [ (sx Pi1 - sy Pi2) cos(t~) - (sx Pi2 - sy Pi1) sin(t~) ]
  s.big_q2 = Complex{scale * ct, 0.0} *
                 (SpinPhaseOperator::from_spin(1, pi1) - SpinPhaseOperator::from_spin(2, pi2)) +
             Complex{-scale * st, 0.0} *
                 (SpinPhaseOperator::from_spin(1, pi2) - SpinPhaseOperator::from_spin(2, pi1));
  return s;
}

SusySpectrumReport susy_spectrum_check(const LandauParams& p, std::size_t n_max) {
  require_region_one(p);
  const LadderSet L = build_ladder(p);
  const FockOperator h = fock_matrix(L.h, n_max);
  const std::vector<double> orbital = eig_herm_values(h.matrix);
  const double w = p.abs_omega;

  SusySpectrumReport rep;
  rep.n_max = n_max;
  rep.up.reserve(orbital.size());
  rep.down.reserve(orbital.size());
  for (double e : orbital) {
    rep.up.push_back(e + 0.5 * w);
    rep.down.push_back(e - 0.5 * w);
  }
  rep.ground_energy = rep.down.front();

  // Converged representative of orbital level k: the lowest eigenvalue inside
  // the 1e-6 |omega| window around (k + 1/2)|omega|.  The compression is
  // variational, so that member carries the smallest truncation error.  A
  // level is trusted when at least two members have converged into the window.
  auto representative = [&](int k) -> std::pair<bool, double> {
    const double target = (k + 0.5) * w;
    double best = 0.0;
    int count = 0;
    for (double e : orbital) {
      if (std::abs(e - target) <= 1e-6 * w) {
        if (count == 0 || e < best) best = e;
        ++count;
      }
    }
    return {count >= 2, best};
  };

  // Pair E_up(n) = orbital(n) + |omega|/2 with E_dn(n) = orbital(n+1) - |omega|/2:
  // both towers host the value (n+1)|omega|; the zero-energy sector pairs with nothing.
  rep.max_pairing_error = 0.0;
  rep.paired_levels = 0;
  for (int n = 0;; ++n) {
    const auto [ok_lo, e_lo] = representative(n);
    const auto [ok_hi, e_hi] = representative(n + 1);
    if (!ok_lo || !ok_hi) break;
    rep.max_pairing_error = std::max(rep.max_pairing_error, std::abs((e_lo + 0.5 * w) - (e_hi - 0.5 * w)));
    ++rep.paired_levels;
  }
  rep.truncation_warning = rep.paired_levels < 1;
  return rep;
}

}  // namespace lossgain
