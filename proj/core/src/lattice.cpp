#include "wqed/lattice.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace wqed {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

Beta Beta::golden() {
  Beta b;
  b.golden_ = true;
  return b;
}

Beta Beta::rational(std::int64_t chi, std::int64_t eta) {
  if (chi < 1 || eta < 1)
    throw ConfigError("beta: rational chi/eta requires positive integers");
  if (std::gcd(chi, eta) != 1)
    throw ConfigError("beta: chi and eta must be coprime, got " + std::to_string(chi) + "/" +
                      std::to_string(eta));
  Beta b;
  b.golden_ = false;
  b.chi_ = chi;
  b.eta_ = eta;
  return b;
}

Beta Beta::parse(const std::string& text) {
  if (text == "golden") return golden();
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw ConfigError("beta: expected \"golden\" or \"chi/eta\", got \"" + text + "\"");
  std::int64_t chi = 0, eta = 0;
  try {
    std::size_t used1 = 0, used2 = 0;
    chi = std::stoll(text.substr(0, slash), &used1);
    eta = std::stoll(text.substr(slash + 1), &used2);
    if (used1 != slash || used2 != text.size() - slash - 1)
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ConfigError("beta: could not parse \"" + text + "\" as chi/eta");
  }
  return rational(chi, eta);
}

std::int64_t Beta::chi() const {
  if (golden_) throw ConfigError("beta: golden ratio has no rational numerator");
  return chi_;
}

std::int64_t Beta::eta() const {
  if (golden_) throw ConfigError("beta: golden ratio has no rational denominator");
  return eta_;
}

double Beta::value() const {
  return golden_ ? golden_ratio() : static_cast<double>(chi_) / static_cast<double>(eta_);
}

std::string Beta::str() const {
  if (golden_) return "golden";
  return std::to_string(chi_) + "/" + std::to_string(eta_);
}

void LatticeSpec::validate() const {
  if (n_qubits < 0) throw ConfigError("n_qubits: must be >= 0");
  if (!(omega0 > 0.0)) throw ConfigError("omega0: must be > 0");
  if (!(gamma0 > 0.0)) throw ConfigError("gamma0: must be > 0");
  if (!(phi > 0.0)) throw ConfigError("phi: must be > 0");
  if (!(delta >= 0.0)) throw ConfigError("delta: must be >= 0");
  if (!(theta >= 0.0 && theta < kTwoPi)) throw ConfigError("theta: must lie in [0, 2*pi)");
}

double spacing_from_phase(double omega0, double phi) {
  if (!(omega0 > 0.0)) throw ConfigError("omega0: must be > 0");
  if (!(phi > 0.0)) throw ConfigError("phi: must be > 0");
  return phi / omega0;
}

std::vector<double> qubit_positions(const LatticeSpec& spec) {
  spec.validate();
  const double d = spec.spacing();
  const int n = spec.n_qubits;
  std::vector<double> z(static_cast<std::size_t>(n));
  if (spec.beta.is_rational()) {
    const std::int64_t chi = spec.beta.chi();
    const std::int64_t eta = spec.beta.eta();
    for (int j = 1; j <= n; ++j) {
      // Reduced phase keeps the pattern exactly eta-periodic.
      const std::int64_t m = (chi * j) % eta;
      const double arg = kTwoPi * static_cast<double>(m) / static_cast<double>(eta) + spec.theta;
      z[static_cast<std::size_t>(j - 1)] = d * (j + spec.delta * std::cos(arg));
    }
  } else {
    const double beta = golden_ratio();
    for (int j = 1; j <= n; ++j) {
      const double arg = kTwoPi * beta * j + spec.theta;
      z[static_cast<std::size_t>(j - 1)] = d * (j + spec.delta * std::cos(arg));
    }
  }
  return z;
}

FibonacciApproximant fibonacci_approximant(int n) {
  if (n < 2) throw ConfigError("fibonacci approximant: index must be >= 2");
  if (n > 90) throw ConfigError("fibonacci approximant: index must be <= 90");
  std::int64_t prev = 1, cur = 1;  // F_1, F_2
  for (int k = 2; k < n; ++k) {
    const std::int64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return FibonacciApproximant{n, prev + cur, cur};
}

bool is_fibonacci(std::int64_t v) {
  if (v < 1) return false;
  std::int64_t a = 1, b = 1;
  while (b < v) {
    const std::int64_t next = a + b;
    a = b;
    b = next;
  }
  return b == v;
}

}  // namespace wqed
