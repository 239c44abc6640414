#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "wqed/lattice.hpp"

namespace wqed {

/// Hopping-phase convention of the effective Hamiltonian.  Markov evaluates
/// the phases at the transition frequency (k = omega0, i.e. phi = omega0*d);
/// AtFrequency uses the frequency of the input photon, which is required for
/// exact agreement between the resolvent and the transfer-matrix amplitudes.
class PhaseMode {
public:
  static PhaseMode markov() { return PhaseMode(true, 0.0); }
  static PhaseMode at_frequency(double omega);

  bool is_markov() const { return markov_; }
  double omega() const;  ///< AtFrequency only
  double wavenumber(const LatticeSpec& spec) const { return markov_ ? spec.omega0 : omega_; }

private:
  PhaseMode(bool markov, double omega) : markov_(markov), omega_(omega) {}
  bool markov_;
  double omega_;
};

/// N x N non-Hermitian single-excitation Hamiltonian
/// H[j,l] = omega0*delta_jl - i*Gamma0*exp(i*k*|z_l - z_j|).
/// Complex symmetric (H = H^T entrywise, not conjugate-transpose); the
/// diagonal is exactly omega0 - i*Gamma0.
struct EffectiveHamiltonian {
  Eigen::MatrixXcd matrix;
  PhaseMode phase_mode;
  LatticeSpec spec;
};

/// Full eigensystem of an EffectiveHamiltonian.  States are sorted by
/// ascending Re(omega_n), ties by ascending Im.  Two normalizations are
/// carried side by side: L2 (sum |psi|^2 = 1) for populations and IPR, and
/// complex-symmetric (sum psi^2 = 1) for the resolvent modal expansion.
/// States where sum psi^2 vanishes (exceptional points) are flagged and left
/// L2-normalized in the symmetric slots; modal consumers must skip them.
struct ExcitationSpectrum {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd eigenvectors_l2;
  Eigen::MatrixXcd eigenvectors_sym;
  Eigen::VectorXd ipr;
  Eigen::VectorXd lifetime_ratio;  ///< tau/tau0; +inf if Im(omega_n) >= 0 numerically
  std::vector<bool> exceptional;

  bool any_exceptional() const;
};

EffectiveHamiltonian build_effective_hamiltonian(const LatticeSpec& spec, PhaseMode mode);

/// Dense non-Hermitian eigendecomposition.  The shifted, dimensionless
/// matrix (H - omega0 I)/Gamma0 is what actually gets factorized, so the
/// large diagonal does not pollute the small imaginary parts.  Residuals
/// ||H psi - omega psi|| <= 1e-10 * ||H||_F are enforced per pair.
ExcitationSpectrum eigendecompose(const EffectiveHamiltonian& h);

/// Sum_j |psi(j)|^4 for an L2-normalized state; in [1/N, 1].
double ipr(const Eigen::VectorXcd& psi_l2);

/// tau/tau0 = gamma0/|Im(omega_n)|; > 1 subradiant, < 1 superradiant.
/// Requires Im(omega_n) < 0.
double lifetime_ratio(std::complex<double> omega_n, double gamma0);

enum class SweepAxis { Delta, Theta };

struct SpectrumSweepRow {
  double axis_value;
  int n;  ///< state index at this grid point (energy order)
  double re_omega;
  double im_omega;
  double ipr;
  double lifetime_ratio;
};

struct ProbabilityRow {
  double axis_value;
  int n;
  int j;  ///< qubit index 1..N
  double prob;
};

struct SpectrumSweep {
  SweepAxis axis;
  std::vector<SpectrumSweepRow> rows;
  std::vector<ProbabilityRow> profiles;                 ///< only when requested
  std::vector<std::pair<int, std::string>> errors;      ///< grid index -> message
};

/// Markov spectra over a delta or theta grid.  Grid points run in parallel;
/// rows are assembled in grid order regardless of completion order.  Failed
/// points are recorded and skipped, never abort the sweep.
SpectrumSweep spectrum_sweep(const LatticeSpec& spec_template, SweepAxis axis,
                             const std::vector<double>& grid, bool with_profiles = false,
                             int jobs = 0);

}  // namespace wqed
