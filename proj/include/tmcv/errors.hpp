#pragma once

#include <stdexcept>
#include <string>

namespace tmcv {

enum class ErrorCode {
    NotARoot,
    NotDominant,
    NotRestricted,
    OnWall,
    OnBoxWall,
    UnlabeledAlcove,
    WrongSystem,
    MissingKey,
    NegativeResidue,
    SchemaError,
    OracleMismatch,
    ParityViolation,
    SearchExhausted,
    CounterexampleFound,
    CharacterMismatch,
    UnknownCohomology,
    UnresolvedCase,
    NegativityDetected,
    Overflow,
    ParseError,
    UnsupportedCase,
    MissingData,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace tmcv
