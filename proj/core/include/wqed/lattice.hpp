#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wqed/errors.hpp"

namespace wqed {

/// Golden ratio (1 + sqrt 5) / 2.
double golden_ratio();

/// Spacing modulation frequency: either the golden ratio, kept symbolic so
/// it is evaluated at full double precision wherever it is used, or an
/// exact rational chi/eta (coprime, eta >= 1).  Band-structure code demands
/// rationality; scattering code accepts both.
class Beta {
public:
  static Beta golden();
  static Beta rational(std::int64_t chi, std::int64_t eta);
  /// Accepts "golden" or "chi/eta" (e.g. "55/34").
  static Beta parse(const std::string& text);

  bool is_golden() const { return golden_; }
  bool is_rational() const { return !golden_; }
  std::int64_t chi() const;
  std::int64_t eta() const;
  double value() const;
  std::string str() const;

  friend bool operator==(const Beta& a, const Beta& b) = default;

private:
  Beta() = default;
  bool golden_ = true;
  std::int64_t chi_ = 0;
  std::int64_t eta_ = 0;
};

/// Full parameterization of the qubit array.  Units: hbar = 1, c = 1, so
/// frequencies are inverse times and the spacing constant is d = phi/omega0.
struct LatticeSpec {
  int n_qubits = 0;       ///< N >= 0
  double omega0 = 100.0;  ///< qubit transition frequency, > 0
  double gamma0 = 0.01;   ///< single-qubit radiative decay rate, > 0
  double phi = 1.0;       ///< phase constant omega0*d, > 0
  double delta = 0.0;     ///< quasiperiodic strength, >= 0
  Beta beta = Beta::golden();
  double theta = 0.0;     ///< modulation phase in [0, 2*pi)

  double spacing() const { return phi / omega0; }  ///< d, with c = 1
  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Rational approximant F_{n+1}/F_n of the golden ratio.
struct FibonacciApproximant {
  int index = 0;         ///< n
  std::int64_t chi = 0;  ///< F_{n+1}
  std::int64_t eta = 0;  ///< F_n
  Beta beta() const { return Beta::rational(chi, eta); }
};

/// d = phi / omega0 (c = 1).  Rejects non-positive inputs.
double spacing_from_phase(double omega0, double phi);

/// Qubit positions z_j = d*[j + delta*cos(2*pi*beta*j + theta)], j = 1..N.
/// For rational beta the phase argument is reduced mod eta, so the pattern
/// is exactly periodic: z_{j+eta} - z_j = d*eta.  Positions are not
/// guaranteed monotonic for large delta; consumers must use |z_j - z_l|.
std::vector<double> qubit_positions(const LatticeSpec& spec);

/// (F_{n+1}, F_n) with F_1 = F_2 = 1.  Requires 2 <= n <= 90.
FibonacciApproximant fibonacci_approximant(int n);

/// True if v is a Fibonacci number (1, 2, 3, 5, 8, ...).
bool is_fibonacci(std::int64_t v);

}  // namespace wqed
