// errors.hpp — Exception types thrown across the library
#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coupling sits exactly at the phase transition; the polariton gap closes and
// every derived quantity is singular there.
struct CriticalPointError : Error {
    using Error::Error;
};

// Pump mapping produced a non-positive effective cavity frequency.
struct NonPositiveFrequencyError : Error {
    using Error::Error;
};

// Qubit exactly resonant with the cavity; the dispersive shift g^2/Delta is undefined.
struct ZeroDetuningError : Error {
    using Error::Error;
};

// Bell-diagonal parameters violate positivity of the density matrix.
struct InvalidStateError : Error {
    using Error::Error;
};

// Single-qubit marginals deviate from maximally mixed; the closed-form
// correlation expressions no longer apply.
struct MarginalError : Error {
    using Error::Error;
};

// Amplification rate is undefined when the initial discord vanishes.
struct ZeroInitialDiscordError : Error {
    using Error::Error;
};

// Doubling the Fock cutoff moved an oracle value by more than the tolerance.
struct UnconvergedError : Error {
    using Error::Error;
};

struct NonPositiveInputError : Error {
    using Error::Error;
};

// Sweep configuration could not be parsed or fails its invariants.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace dicke
