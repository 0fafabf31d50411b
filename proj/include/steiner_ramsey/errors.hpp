#pragma once

#include <stdexcept>
#include <string>

namespace steiner_ramsey {

// Every library failure derives from `error`. The CLI maps the three
// families below onto its exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or contract-violating input (exit code 3).
class input_error : public error {
public:
    using error::error;
};

// A claimed property was refuted; usually carries a certificate (exit code 1).
class refutation_error : public error {
public:
    using error::error;
};

// Out of reach at desk scale (exit code 2).
class infeasible_error : public error {
public:
    using error::error;
};

#define STEINER_RAMSEY_ERROR(name, base)                   \
    class name : public base {                             \
    public:                                                \
        explicit name(const std::string& what)             \
            : base(std::string(#name ": ") + what) {}      \
    };

STEINER_RAMSEY_ERROR(EdgeArityError, input_error)
STEINER_RAMSEY_ERROR(SteinerViolation, input_error)
STEINER_RAMSEY_ERROR(RangeError, input_error)
STEINER_RAMSEY_ERROR(NonInjectiveMap, input_error)
STEINER_RAMSEY_ERROR(ParameterMismatch, input_error)
STEINER_RAMSEY_ERROR(LetterNotInAlphabet, input_error)
STEINER_RAMSEY_ERROR(DimensionMismatch, input_error)
STEINER_RAMSEY_ERROR(IndexOutOfRange, input_error)
STEINER_RAMSEY_ERROR(NonCrossingEdge, input_error)
STEINER_RAMSEY_ERROR(ProjectionNotEdge, input_error)
STEINER_RAMSEY_ERROR(CopyNotStrong, input_error)
STEINER_RAMSEY_ERROR(CopyNotCrossing, input_error)
STEINER_RAMSEY_ERROR(WitnessShapeMismatch, input_error)
STEINER_RAMSEY_ERROR(PatternComplete, input_error)
STEINER_RAMSEY_ERROR(PatternHomogeneous, input_error)
STEINER_RAMSEY_ERROR(FormatError, input_error)

STEINER_RAMSEY_ERROR(ArrowRefuted, refutation_error)
STEINER_RAMSEY_ERROR(WitnessArrowUnverified, refutation_error)

STEINER_RAMSEY_ERROR(SizeLimitExceeded, infeasible_error)
STEINER_RAMSEY_ERROR(SearchInfeasible, infeasible_error)
STEINER_RAMSEY_ERROR(StrategyInfeasible, infeasible_error)
STEINER_RAMSEY_ERROR(ProviderFailure, infeasible_error)

// Construction invariants that the theory guarantees. Hitting one of these
// means the construction code is wrong, not the input.
class construction_bug : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#undef STEINER_RAMSEY_ERROR

} // namespace steiner_ramsey
