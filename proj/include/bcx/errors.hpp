// Error taxonomy shared by all bcx components.
#ifndef BCX_ERRORS_HPP
#define BCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcx {

enum class ErrorCode {
    AxiomViolation,
    EmptyCircuit,
    ElementNotInGroundSet,
    HasLoops,
    NotConnected,
    BadBasepoint,
    OverlappingGroundSets,
    BadParameters,
    TooLarge,
    LengthMismatch,
    EmptySequence,
    NegativeCoefficients,
    NotStartingAtOne,
    PreconditionViolation,
    InternalInconsistency,
    ParseError,
    UnknownPredicate,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace bcx

#endif
