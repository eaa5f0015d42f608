#pragma once

#include <stdexcept>
#include <string>

namespace tangleh {

enum class Err {
  MalformedSyntax,
  LabelMultiplicity,
  SignLengthMismatch,
  SignPairing,
  TopologyLengthMismatch,
  StateLengthMismatch,
  TooManyCrossings,
  NotAdjacent,
  UnrecognizedTransition,
  StateMismatch,
  ImageNotInKernel,
  ShiftMismatch,
  ConvolutionMismatch,
  UnknownStrand,
  InfeasibleParameters,
  InternalInconsistency,
};

const char* err_name(Err e);

// Errors signalling a broken internal invariant rather than bad input;
// the CLI maps these to exit code 2, everything else to exit 1.
bool err_is_internal(Err e);

class TangleError : public std::runtime_error {
public:
  TangleError(Err code, const std::string& msg);
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace tangleh
