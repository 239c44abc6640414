#include "wqed/green_scattering.hpp"

#include <cmath>
#include <sstream>

namespace wqed {

namespace {

Eigen::MatrixXcd resolvent_operator(std::span<const double> z, double omega0, double gamma0,
                                    double omega) {
  // A = omega I - H_eff(omega); off-diagonals +i*Gamma0*exp(i*omega*|z_l - z_j|).
  const Eigen::Index n = static_cast<Eigen::Index>(z.size());
  const Complex i_gamma{0.0, gamma0};
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    a(j, j) = Complex{omega - omega0, gamma0};
    for (Eigen::Index l = j + 1; l < n; ++l) {
      const Complex v = i_gamma * std::polar(1.0, omega * std::abs(z[l] - z[j]));
      a(j, l) = v;
      a(l, j) = v;
    }
  }
  return a;
}

struct FactoredResolvent {
  Eigen::MatrixXcd a;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
};

FactoredResolvent factor_resolvent(std::span<const double> z, double omega0, double gamma0,
                                   double omega) {
  if (!(omega > 0.0)) throw ConfigError("omega: photon frequency must be > 0");
  FactoredResolvent f;
  f.a = resolvent_operator(z, omega0, gamma0, omega);
  f.lu.compute(f.a);
  const double rcond = f.lu.rcond();
  if (rcond < 1e-14) {
    std::ostringstream msg;
    msg << "resolvent nearly singular at omega = " << omega << " (rcond " << rcond << ")";
    throw NearSingularResolvent(msg.str());
  }
  return f;
}

Eigen::VectorXcd refined_solve(const FactoredResolvent& f, const Eigen::VectorXcd& rhs) {
  Eigen::VectorXcd x = f.lu.solve(rhs);
  x += f.lu.solve(rhs - f.a * x);
  return x;
}

}  // namespace

void ResolventQuery::validate() const {
  spec.validate();
  if (!(omega > 0.0)) throw ConfigError("omega: photon frequency must be > 0");
}

Eigen::MatrixXcd green_matrix(const LatticeSpec& spec, double omega) {
  const std::vector<double> z = qubit_positions(spec);
  const Eigen::Index n = spec.n_qubits;
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  const FactoredResolvent f = factor_resolvent(z, spec.omega0, spec.gamma0, omega);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd g = f.lu.solve(id);
  g += f.lu.solve(id - f.a * g);
  const double resid = (f.a * g - id).norm();
  if (!(resid <= 1e-9)) {
    std::ostringstream msg;
    msg << "green matrix: residual " << resid << " exceeds 1e-9 at omega = " << omega;
    throw NumericalError(msg.str());
  }
  return g;
}

ScatteringAmplitudes scatter_green_at_positions(std::span<const double> z, double omega0,
                                                double gamma0, double omega) {
  ScatteringAmplitudes amp;
  amp.kappa = omega;
  amp.omega = omega;
  if (z.empty()) {
    amp.r = 0.0;
    amp.t = 1.0;
    return amp;
  }
  const FactoredResolvent f = factor_resolvent(z, omega0, gamma0, omega);

  const Eigen::Index n = static_cast<Eigen::Index>(z.size());
  Eigen::VectorXcd v(n);
  for (Eigen::Index j = 0; j < n; ++j) v[j] = std::polar(1.0, omega * z[j]);
  const Eigen::VectorXcd x = refined_solve(f, v);

  const Complex minus_i_gamma{0.0, -gamma0};
  amp.r = minus_i_gamma * (v.transpose() * x).value();
  amp.t = 1.0 + minus_i_gamma * v.dot(x);  // v.dot conjugates the left factor

  const double flux = amp.abs_r2() + amp.abs_t2();
  if (!(std::abs(flux - 1.0) <= 1e-9)) {
    std::ostringstream msg;
    msg << "scatter_green: flux conservation violated, |r|^2+|t|^2 = " << flux;
    throw NumericalError(msg.str());
  }
  return amp;
}

ScatteringAmplitudes scatter_green(const LatticeSpec& spec, double omega) {
  const std::vector<double> z = qubit_positions(spec);
  return scatter_green_at_positions(z, spec.omega0, spec.gamma0, omega);
}

Complex reflection_green(const LatticeSpec& spec, double omega) {
  return scatter_green(spec, omega).r;
}

Complex transmission_green(const LatticeSpec& spec, double omega) {
  return scatter_green(spec, omega).t;
}

Complex reflection_modal(const LatticeSpec& spec, double omega) {
  if (spec.n_qubits == 0) return Complex{0.0, 0.0};
  if (!(omega > 0.0)) throw ConfigError("omega: photon frequency must be > 0");
  const EffectiveHamiltonian h = build_effective_hamiltonian(spec, PhaseMode::at_frequency(omega));
  const ExcitationSpectrum es = eigendecompose(h);
  if (es.any_exceptional())
    throw ModalExpansionUnavailable(
        "modal expansion: spectrum contains an exceptional state; use the direct solve");

  const std::vector<double> z = qubit_positions(spec);
  const Eigen::Index n = spec.n_qubits;
  Eigen::VectorXcd v(n);
  for (Eigen::Index j = 0; j < n; ++j) v[j] = std::polar(1.0, omega * z[j]);

  Complex sum{0.0, 0.0};
  for (Eigen::Index s = 0; s < n; ++s) {
    const Complex w = (v.transpose() * es.eigenvectors_sym.col(s)).value();
    sum += w * w / (omega - es.eigenvalues[s]);
  }
  return Complex{0.0, -spec.gamma0} * sum;
}

Complex reflection(const ResolventQuery& query) {
  query.validate();
  return query.method == ResolventMethod::DirectSolve ? reflection_green(query.spec, query.omega)
                                                      : reflection_modal(query.spec, query.omega);
}

}  // namespace wqed
