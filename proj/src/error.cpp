#include "srcomplex/error.hpp"

namespace srcomplex {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotInGraver: return "NotInGraver";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::FreeVectorPresent: return "FreeVectorPresent";
    case ErrorCode::FreeBouquetPresent: return "FreeBouquetPresent";
    case ErrorCode::TooFewColumns: return "TooFewColumns";
    case ErrorCode::NonIncreasing: return "NonIncreasing";
    case ErrorCode::FullSupportViolated: return "FullSupportViolated";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::FirstComponentNotPositive: return "FirstComponentNotPositive";
    case ErrorCode::BezoutMismatch: return "BezoutMismatch";
    case ErrorCode::InvalidOmega: return "InvalidOmega";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::EntryCountMismatch: return "EntryCountMismatch";
    case ErrorCode::NonIntegerToken: return "NonIntegerToken";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace srcomplex
