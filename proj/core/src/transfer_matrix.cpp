#include "wqed/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wqed {

namespace {
constexpr int kRescaleCadence = 32;
constexpr double kRescaleCeiling = 1e150;

TransferMatrix2 emitter_matrix_impl(double kappa, double z, double omega0, double gamma0) {
  if (!(kappa > 0.0)) throw ConfigError("kappa: must be > 0");
  const double omega = kappa;  // c = 1
  if (omega == omega0)
    throw PoleAtResonance("emitter matrix: photon frequency equals omega0 exactly");
  // f = i*Gamma0 / (2*(omega0 - omega)), purely imaginary for real omega.
  const Complex two_f{0.0, gamma0 / (omega0 - omega)};
  const Complex phase = std::polar(1.0, 2.0 * kappa * z);
  TransferMatrix2 m;
  m.t11 = 1.0 + two_f;
  m.t12 = two_f * std::conj(phase);
  m.t21 = -two_f * phase;
  m.t22 = 1.0 - two_f;
  return m;
}
}  // namespace

double TransferMatrix2::max_abs() const {
  return std::max(std::max(std::abs(t11), std::abs(t12)), std::max(std::abs(t21), std::abs(t22)));
}

void TransferMatrix2::rescale() {
  const double m = max_abs();
  if (!(m > 0.0) || !std::isfinite(m))
    throw NumericalError("transfer matrix: degenerate block during renormalization");
  t11 /= m;
  t12 /= m;
  t21 /= m;
  t22 /= m;
  log_scale += std::log(m);
}

void TransferMatrix2::apply_left(const TransferMatrix2& m) {
  const Complex a11 = m.t11 * t11 + m.t12 * t21;
  const Complex a12 = m.t11 * t12 + m.t12 * t22;
  const Complex a21 = m.t21 * t11 + m.t22 * t21;
  const Complex a22 = m.t21 * t12 + m.t22 * t22;
  t11 = a11;
  t12 = a12;
  t21 = a21;
  t22 = a22;
  log_scale += m.log_scale;
}

TransferMatrix2 emitter_matrix(double kappa, double z, const LatticeSpec& spec) {
  spec.validate();
  return emitter_matrix_impl(kappa, z, spec.omega0, spec.gamma0);
}

TransferMatrix2 chain_matrix_at_positions(std::span<const double> z, double omega0, double gamma0,
                                          double kappa) {
  TransferMatrix2 t;
  int since_rescale = 0;
  for (const double zj : z) {
    t.apply_left(emitter_matrix_impl(kappa, zj, omega0, gamma0));
    if (++since_rescale == kRescaleCadence) {
      t.rescale();
      since_rescale = 0;
    } else if (t.max_abs() > kRescaleCeiling) {
      t.rescale();
    }
  }
  return t;
}

TransferMatrix2 chain_matrix(const LatticeSpec& spec, double kappa) {
  const std::vector<double> z = qubit_positions(spec);
  return chain_matrix_at_positions(z, spec.omega0, spec.gamma0, kappa);
}

namespace {
ScatteringAmplitudes amplitudes_from_chain(const TransferMatrix2& t, double kappa) {
  // |T22|^2 = 1 + |T21|^2 for real omega, so T22 = 0 cannot occur.
  ScatteringAmplitudes amp;
  amp.kappa = kappa;
  amp.omega = kappa;
  amp.r = -t.t21 / t.t22;
  amp.t = std::exp(-t.log_scale) / t.t22;
  const double flux = amp.abs_r2() + amp.abs_t2();
  if (!(std::abs(flux - 1.0) <= 1e-10)) {
    std::ostringstream msg;
    msg << "scatter: flux conservation violated, |r|^2+|t|^2 = " << flux;
    throw NumericalError(msg.str());
  }
  return amp;
}
}  // namespace

ScatteringAmplitudes scatter_at_positions(std::span<const double> z, double omega0, double gamma0,
                                          double kappa) {
  return amplitudes_from_chain(chain_matrix_at_positions(z, omega0, gamma0, kappa), kappa);
}

ScatteringAmplitudes scatter(const LatticeSpec& spec, double kappa) {
  return amplitudes_from_chain(chain_matrix(spec, kappa), kappa);
}

double Resistance::log_rho() const {
  if (!(log1p_rho > 0.0)) return -std::numeric_limits<double>::infinity();
  return log1p_rho + std::log1p(-std::exp(-log1p_rho));
}

Resistance resistance(const LatticeSpec& spec, double kappa) {
  const TransferMatrix2 t = chain_matrix(spec, kappa);
  // ln(1+rho) = ln|T22|^2 with the scale restored; >= 0 up to rounding.
  double d = 2.0 * (t.log_scale + std::log(std::abs(t.t22)));
  if (d < 0.0) d = 0.0;
  Resistance res;
  res.log1p_rho = d;
  res.rho = std::expm1(d);

  // rho = Re(T12*T21) for real omega, by T11*T22 - T12*T21 = 1 and
  // pseudo-unitarity.  Compare when representable and away from rho ~ 0.
  const double mag12 = std::abs(t.t12);
  const double mag21 = std::abs(t.t21);
  if (res.rho >= 1e-6 && std::isfinite(res.rho) && mag12 > 0.0 && mag21 > 0.0) {
    const double log_mag = 2.0 * t.log_scale + std::log(mag12) + std::log(mag21);
    if (log_mag < 690.0) {
      const double check = std::real(t.t12 * t.t21) * std::exp(2.0 * t.log_scale);
      if (!(std::abs(check - res.rho) <= 1e-8 * std::max(std::abs(check), res.rho))) {
        std::ostringstream msg;
        msg << "resistance: Landauer and T12*T21 routes disagree: " << res.rho << " vs " << check;
        throw NumericalError(msg.str());
      }
    }
  }
  return res;
}

}  // namespace wqed
