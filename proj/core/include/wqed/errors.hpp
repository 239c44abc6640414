#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or parameters (CLI exit code 2).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Numerical failure in a computation (CLI exit code 3).
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Photon frequency hit the qubit transition frequency exactly; the
/// single-emitter transfer-matrix factor has a pole there.  On-resonance
/// values are available through the Green-function path, or offset the
/// frequency by one ulp.
class PoleAtResonance : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Quasimomentum too close to the divergence of the Bloch Hamiltonian
/// (cos(q eta) == cos(phi eta)).
class SingularQuasimomentum : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class EigensolverFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Resolvent (omega I - H_eff) nearly singular at the requested frequency.
class NearSingularResolvent : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Modal expansion refused because the spectrum contains an exceptional
/// (defective) state; use the direct solve instead.
class ModalExpansionUnavailable : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Window-doubling stability check of the overall reflection failed; the
/// integration window must be widened.
class TailCheckFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace wqed
