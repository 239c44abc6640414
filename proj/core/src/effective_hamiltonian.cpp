#include "wqed/effective_hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>

#include "wqed/parallel.hpp"

namespace wqed {

namespace {

std::uint64_t fnv1a64(const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::string matrix_fingerprint(const Eigen::MatrixXcd& m) {
  std::ostringstream out;
  out << "fnv1a64:" << std::hex
      << fnv1a64(m.data(), sizeof(std::complex<double>) * static_cast<std::size_t>(m.size()))
      << " (" << std::dec << m.rows() << "x" << m.cols() << ")";
  return out.str();
}

}  // namespace

PhaseMode PhaseMode::at_frequency(double omega) {
  if (!(omega > 0.0)) throw ConfigError("phase mode: photon frequency must be > 0");
  return PhaseMode(false, omega);
}

double PhaseMode::omega() const {
  if (markov_) throw ConfigError("phase mode: Markov mode has no photon frequency");
  return omega_;
}

bool ExcitationSpectrum::any_exceptional() const {
  return std::any_of(exceptional.begin(), exceptional.end(), [](bool f) { return f; });
}

EffectiveHamiltonian build_effective_hamiltonian(const LatticeSpec& spec, PhaseMode mode) {
  const std::vector<double> z = qubit_positions(spec);
  const int n = spec.n_qubits;
  const double k = mode.wavenumber(spec);
  const Complex minus_i_gamma{0.0, -spec.gamma0};

  Eigen::MatrixXcd h(n, n);
  for (int j = 0; j < n; ++j) {
    h(j, j) = Complex{spec.omega0, -spec.gamma0};  // |z_j - z_j| = 0 term included
    for (int l = j + 1; l < n; ++l) {
      const Complex hop = minus_i_gamma * std::polar(1.0, k * std::abs(z[l] - z[j]));
      h(j, l) = hop;
      h(l, j) = hop;  // complex symmetric, exact
    }
  }
  return EffectiveHamiltonian{std::move(h), mode, spec};
}

ExcitationSpectrum eigendecompose(const EffectiveHamiltonian& h) {
  const Eigen::Index n = h.matrix.rows();
  if (n < 1) throw std::invalid_argument("eigendecompose: requires N >= 1");
  const double omega0 = h.spec.omega0;
  const double gamma0 = h.spec.gamma0;

  // Shifted, dimensionless matrix: eigenvalues of H are omega0 + gamma0*nu.
  Eigen::MatrixXcd d = (h.matrix - omega0 * Eigen::MatrixXcd::Identity(n, n)) / gamma0;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(d, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw EigensolverFailure("eigendecompose: solver did not converge, matrix " +
                             matrix_fingerprint(h.matrix));

  const Eigen::VectorXcd nu = solver.eigenvalues();
  const Eigen::MatrixXcd& vec = solver.eigenvectors();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (nu[a].real() != nu[b].real()) return nu[a].real() < nu[b].real();
    return nu[a].imag() < nu[b].imag();
  });

  ExcitationSpectrum spec;
  spec.eigenvalues.resize(n);
  spec.eigenvectors_l2.resize(n, n);
  spec.eigenvectors_sym.resize(n, n);
  spec.ipr.resize(n);
  spec.lifetime_ratio.resize(n);
  spec.exceptional.assign(static_cast<std::size_t>(n), false);

  const double h_norm = h.matrix.norm();  // Frobenius
  const double residual_bound = 1e-10 * h_norm / gamma0;

  for (Eigen::Index s = 0; s < n; ++s) {
    const Eigen::Index src = order[static_cast<std::size_t>(s)];
    const Complex nu_s = nu[src];
    Eigen::VectorXcd psi = vec.col(src);

    const double resid = (d * psi - nu_s * psi).norm() / psi.norm();
    if (!(resid <= residual_bound)) {
      std::ostringstream msg;
      msg << "eigendecompose: residual " << resid * gamma0 << " exceeds bound for state " << s
          << ", matrix " << matrix_fingerprint(h.matrix);
      throw EigensolverFailure(msg.str());
    }

    psi /= psi.norm();  // L2
    spec.eigenvalues[s] = Complex{omega0, 0.0} + gamma0 * nu_s;
    spec.eigenvectors_l2.col(s) = psi;
    spec.ipr[s] = psi.array().abs2().square().sum();

    const double im = spec.eigenvalues[s].imag();
    spec.lifetime_ratio[s] =
        im < 0.0 ? gamma0 / (-im) : std::numeric_limits<double>::infinity();

    // Complex-symmetric normalization: sum_j psi(j)^2 = 1 (no conjugation).
    const Complex sigma = (psi.array() * psi.array()).sum();
    if (std::abs(sigma) < 1e-12) {
      spec.exceptional[static_cast<std::size_t>(s)] = true;
      spec.eigenvectors_sym.col(s) = psi;
    } else {
      spec.eigenvectors_sym.col(s) = psi / std::sqrt(sigma);
    }
  }
  return spec;
}

double ipr(const Eigen::VectorXcd& psi_l2) {
  const double norm2 = psi_l2.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= 1e-10))
    throw std::invalid_argument("ipr: state is not L2-normalized");
  return psi_l2.array().abs2().square().sum();
}

double lifetime_ratio(std::complex<double> omega_n, double gamma0) {
  if (!(gamma0 > 0.0)) throw std::invalid_argument("lifetime_ratio: gamma0 must be > 0");
  if (!(omega_n.imag() < 0.0))
    throw std::invalid_argument("lifetime_ratio: requires Im(omega_n) < 0");
  return gamma0 / (-omega_n.imag());
}

SpectrumSweep spectrum_sweep(const LatticeSpec& spec_template, SweepAxis axis,
                             const std::vector<double>& grid, bool with_profiles, int jobs) {
  if (grid.empty()) throw ConfigError("spectrum sweep: grid must be non-empty");

  struct PointResult {
    std::vector<SpectrumSweepRow> rows;
    std::vector<ProbabilityRow> profiles;
    std::string error;
    bool failed = false;
  };
  std::vector<PointResult> results(grid.size());

  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    PointResult& out = results[i];
    try {
      LatticeSpec spec = spec_template;
      if (axis == SweepAxis::Delta)
        spec.delta = grid[i];
      else
        spec.theta = grid[i];
      const ExcitationSpectrum es = eigendecompose(build_effective_hamiltonian(spec, PhaseMode::markov()));
      const Eigen::Index n = es.eigenvalues.size();
      out.rows.reserve(static_cast<std::size_t>(n));
      for (Eigen::Index s = 0; s < n; ++s) {
        out.rows.push_back({grid[i], static_cast<int>(s), es.eigenvalues[s].real(),
                            es.eigenvalues[s].imag(), es.ipr[s], es.lifetime_ratio[s]});
      }
      if (with_profiles) {
        for (Eigen::Index s = 0; s < n; ++s)
          for (Eigen::Index j = 0; j < n; ++j)
            out.profiles.push_back({grid[i], static_cast<int>(s), static_cast<int>(j) + 1,
                                    std::norm(es.eigenvectors_l2(j, s))});
      }
    } catch (const std::exception& e) {
      out.failed = true;
      out.error = e.what();
    }
  });

  SpectrumSweep sweep;
  sweep.axis = axis;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].failed) {
      sweep.errors.emplace_back(static_cast<int>(i), results[i].error);
      continue;
    }
    sweep.rows.insert(sweep.rows.end(), results[i].rows.begin(), results[i].rows.end());
    sweep.profiles.insert(sweep.profiles.end(), results[i].profiles.begin(),
                          results[i].profiles.end());
  }
  return sweep;
}

}  // namespace wqed
