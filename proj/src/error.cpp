#include "tangleh/error.hpp"

namespace tangleh {

const char* err_name(Err e) {
  switch (e) {
    case Err::MalformedSyntax: return "MalformedSyntax";
    case Err::LabelMultiplicity: return "LabelMultiplicity";
    case Err::SignLengthMismatch: return "SignLengthMismatch";
    case Err::SignPairing: return "SignPairing";
    case Err::TopologyLengthMismatch: return "TopologyLengthMismatch";
    case Err::StateLengthMismatch: return "StateLengthMismatch";
    case Err::TooManyCrossings: return "TooManyCrossings";
    case Err::NotAdjacent: return "NotAdjacent";
    case Err::UnrecognizedTransition: return "UnrecognizedTransition";
    case Err::StateMismatch: return "StateMismatch";
    case Err::ImageNotInKernel: return "ImageNotInKernel";
    case Err::ShiftMismatch: return "ShiftMismatch";
    case Err::ConvolutionMismatch: return "ConvolutionMismatch";
    case Err::UnknownStrand: return "UnknownStrand";
    case Err::InfeasibleParameters: return "InfeasibleParameters";
    case Err::InternalInconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

bool err_is_internal(Err e) {
  return e == Err::InternalInconsistency || e == Err::ImageNotInKernel;
}

TangleError::TangleError(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw TangleError(code, msg); }

}  // namespace tangleh
