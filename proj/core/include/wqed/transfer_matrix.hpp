#pragma once

#include <complex>
#include <span>

#include "wqed/lattice.hpp"

namespace wqed {

using Complex = std::complex<double>;

/// 2x2 transfer matrix with a running logarithmic prefactor: the matrix
/// represented is exp(log_scale) * [[t11, t12], [t21, t22]].  Entries grow
/// like exp(N/xi) in the localized phase, so the stored block is
/// renormalized periodically to keep everything in double range.
struct TransferMatrix2 {
  Complex t11{1.0, 0.0};
  Complex t12{0.0, 0.0};
  Complex t21{0.0, 0.0};
  Complex t22{1.0, 0.0};
  double log_scale = 0.0;

  /// Determinant of the stored block; the true determinant is
  /// det() * exp(2*log_scale) and equals 1 for any emitter chain.
  Complex det() const { return t11 * t22 - t12 * t21; }
  double max_abs() const;
  /// Divides all entries by the largest magnitude, accumulating its log.
  void rescale();
  /// this <- m * this.
  void apply_left(const TransferMatrix2& m);
};

/// Complex reflection and transmission at one photon frequency.
struct ScatteringAmplitudes {
  double kappa = 0.0;  ///< photon wavenumber (> 0 for right-moving input)
  double omega = 0.0;  ///< = |kappa| with c = 1
  Complex r{0.0, 0.0};
  Complex t{1.0, 0.0};

  double abs_r2() const { return std::norm(r); }
  double abs_t2() const { return std::norm(t); }
  /// Landauer resistance (1 - |t|^2) / |t|^2.
  double rho() const { return (1.0 - std::norm(t)) / std::norm(t); }
};

/// Landauer resistance with overflow-safe bookkeeping.  rho may be +inf for
/// deeply localized chains; log1p_rho = ln(1 + rho) is always finite.
struct Resistance {
  double rho = 0.0;
  double log1p_rho = 0.0;
  double log_rho() const;
};

/// Single-emitter factor M_j at wavenumber kappa and position z.  Throws
/// PoleAtResonance when kappa*c equals omega0 exactly.
TransferMatrix2 emitter_matrix(double kappa, double z, const LatticeSpec& spec);

/// Ordered product M_N * ... * M_1 (rightmost acts first) with periodic
/// renormalization: every 32 multiplications, plus whenever entries exceed
/// 1e150, the block is rescaled into log_scale.
TransferMatrix2 chain_matrix(const LatticeSpec& spec, double kappa);
TransferMatrix2 chain_matrix_at_positions(std::span<const double> z, double omega0, double gamma0,
                                          double kappa);

/// Reflection r = -T21/T22 and transmission t = exp(-log_scale)/T22 (the
/// unit-determinant reduction of T11 - T12*T21/T22, stable deep in the
/// localized phase).  |r|^2 + |t|^2 = 1 is enforced to 1e-10.
ScatteringAmplitudes scatter(const LatticeSpec& spec, double kappa);
ScatteringAmplitudes scatter_at_positions(std::span<const double> z, double omega0, double gamma0,
                                          double kappa);

/// Landauer resistance via ln(1+rho) = 2*(log_scale + ln|T22|).  Cross-checked
/// against Re(T12*T21*exp(2*log_scale)) to a relative 1e-8 whenever both the
/// magnitude and rho >= 1e-6 permit a meaningful comparison.
Resistance resistance(const LatticeSpec& spec, double kappa);

}  // namespace wqed
