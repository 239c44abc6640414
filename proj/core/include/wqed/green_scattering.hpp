#pragma once

#include <Eigen/Dense>

#include "wqed/effective_hamiltonian.hpp"
#include "wqed/transfer_matrix.hpp"

namespace wqed {

enum class ResolventMethod { DirectSolve, ModalExpansion };

struct ResolventQuery {
  LatticeSpec spec;
  double omega = 0.0;  ///< photon frequency = |kappa| (c = 1), > 0
  ResolventMethod method = ResolventMethod::DirectSolve;

  void validate() const;
};

/// G(omega) = (omega I - H_eff)^{-1} with H_eff built at the photon
/// frequency (non-Markov phases).  Solved column-wise from an LU
/// factorization with one step of iterative refinement; the residual
/// ||(omega I - H)G - I|| <= 1e-9 is enforced.  A reciprocal condition
/// estimate below 1e-14 raises NearSingularResolvent.
Eigen::MatrixXcd green_matrix(const LatticeSpec& spec, double omega);

/// Reflection and transmission through the resolvent.  Only bilinear sums
/// of G are needed, so a single factorization and a single solve per
/// frequency serve both amplitudes:
///   r = -i*Gamma0 * v^T G v,        v_j = exp(i*omega*z_j)
///   t = 1 - i*Gamma0 * conj(v)^T G v
/// Valid at omega = omega0 (no transfer-matrix pole on this path).
ScatteringAmplitudes scatter_green(const LatticeSpec& spec, double omega);
ScatteringAmplitudes scatter_green_at_positions(std::span<const double> z, double omega0,
                                                double gamma0, double omega);

Complex reflection_green(const LatticeSpec& spec, double omega);
Complex transmission_green(const LatticeSpec& spec, double omega);

/// Reflection assembled from the modal expansion of G over the
/// complex-symmetric eigenbasis of the AtFrequency Hamiltonian:
///   r = -i*Gamma0 * sum_n [sum_j exp(i*omega*z_j) psi_n(j)]^2 / (omega - omega_n).
/// Refuses with ModalExpansionUnavailable when any state is flagged
/// exceptional.
Complex reflection_modal(const LatticeSpec& spec, double omega);

/// Dispatch on query.method.
Complex reflection(const ResolventQuery& query);

}  // namespace wqed
