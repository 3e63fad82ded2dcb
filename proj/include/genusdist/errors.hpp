#pragma once

#include <stdexcept>
#include <string>

namespace genusdist {

/// Bad input to a public operation (caller's fault).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation could not complete, or an internal invariant broke.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// diagram
class OddLength : public InputError { using InputError::InputError; };
class SymbolCountNotTwo : public InputError { using InputError::InputError; };
class InvalidPairing : public InputError { using InputError::InputError; };

// series
class DivisionByZeroSeries : public ComputationError { using ComputationError::ComputationError; };
class NonCancellingValuation : public ComputationError { using ComputationError::ComputationError; };
class NonzeroConstantTerm : public InputError { using InputError::InputError; };
class UnknownSeriesName : public InputError { using InputError::InputError; };

// exact
class GenusOutOfRange : public InputError { using InputError::InputError; };
class NonIntegerCount : public ComputationError { using ComputationError::ComputationError; };

// asymptotics
class NoConvergence : public ComputationError { using ComputationError::ComputationError; };

// sampler / enumerate
class InfeasibleExactComparison : public InputError { using InputError::InputError; };
class LimitExceeded : public InputError { using InputError::InputError; };

} // namespace genusdist
