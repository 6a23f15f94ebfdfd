#include "cyclo/error.hpp"

namespace cyclo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotOrdered: return "NotOrdered";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::TrivialResult: return "TrivialResult";
    case ErrorCode::TooManyPrimeFactors: return "TooManyPrimeFactors";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace cyclo
