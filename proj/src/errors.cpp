#include "tmcv/errors.hpp"

namespace tmcv {

const char* error_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotRestricted: return "NotRestricted";
    case ErrorCode::OnWall: return "OnWall";
    case ErrorCode::OnBoxWall: return "OnBoxWall";
    case ErrorCode::UnlabeledAlcove: return "UnlabeledAlcove";
    case ErrorCode::WrongSystem: return "WrongSystem";
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::NegativeResidue: return "NegativeResidue";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::CharacterMismatch: return "CharacterMismatch";
    case ErrorCode::UnknownCohomology: return "UnknownCohomology";
    case ErrorCode::UnresolvedCase: return "UnresolvedCase";
    case ErrorCode::NegativityDetected: return "NegativityDetected";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::MissingData: return "MissingData";
    }
    return "Error";
}

} // namespace tmcv
