#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wqed/lattice.hpp"

namespace wqed {

enum class BandLabel { Flat, Curved, Indeterminate };

/// Real energy bands lambda_b(q) = (omega_q - omega0)/Gamma0 of the eta x eta
/// Hermitian Bloch Hamiltonian, together with the inverse bands
/// Gamma0*S_b(q) = 1/lambda_b(q).  Flat bands live entirely in
/// Gamma0|S| >= 1, curved bands entirely in Gamma0|S| <= 1; a band that
/// crosses the line is labeled Indeterminate.
struct BlochBandSet {
  FibonacciApproximant approximant;
  std::vector<double> q_grid;    ///< singular quasimomenta (guard 1e-6) removed
  Eigen::MatrixXd bands;         ///< eta x n_q, stitched lambda values
  Eigen::MatrixXd inverse_bands; ///< eta x n_q, Gamma0*S = 1/lambda
  std::vector<BandLabel> labels; ///< per band
  int ambiguous_stitches = 0;    ///< adjacent-q eigenvalue pairs closer than 1e-10

  int count(BandLabel label) const;
  int flat_count() const { return count(BandLabel::Flat); }
  int curved_count() const { return count(BandLabel::Curved); }
  int indeterminate_count() const { return count(BandLabel::Indeterminate); }
};

struct LocalizationFraction {
  std::int64_t flat_count = 0;
  std::int64_t eta = 0;
  double value = 0.0;  ///< flat_count / eta
  int indeterminate_count = 0;
  double range_lo = 0.0;  ///< = value when indeterminate_count == 0
  double range_hi = 0.0;
};

/// Positions z_l, l = 1..eta, from the spacing law with beta = chi/eta,
/// measured in units of d (phases enter only through phi * differences).
std::vector<double> intracell_positions(const FibonacciApproximant& a, const LatticeSpec& spec);

/// eta x eta Bloch Hamiltonian at quasimomentum q in [-pi/eta, pi/eta]:
///   H_q(l,l') = sin(phi|dz|) + [i sin(q eta) sin(phi dz) + sin(phi eta) cos(phi dz)]
///               / [cos(q eta) - cos(phi eta)],   dz = z_l' - z_l.
/// Hermitian by construction; throws SingularQuasimomentum when the
/// denominator is within 1e-9 of zero (q = +-phi mod reciprocal lattice).
Eigen::MatrixXcd bloch_hamiltonian(double q, const FibonacciApproximant& a,
                                   const LatticeSpec& spec);

/// Bands over a uniform q grid of n_q >= 64 points with singular points
/// excluded.  Within a segment of constant denominator sign, bands are the
/// sorted eigenvalues; across a singular crossing the diverging band wraps
/// from one sorted extreme to the other and the finite bands match in
/// sorted order, which is exactly nearest-value matching there.
BlochBandSet inverse_bands(const FibonacciApproximant& a, const LatticeSpec& spec, int n_q,
                           int jobs = 0);

/// Flat-band fraction flat/eta.  Any Indeterminate band widens the result
/// into [flat/eta, (flat+indeterminate)/eta].
LocalizationFraction localization_fraction(const FibonacciApproximant& a, const LatticeSpec& spec,
                                           int n_q, int jobs = 0);

}  // namespace wqed
