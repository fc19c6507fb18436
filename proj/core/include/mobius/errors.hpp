#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

enum class ErrorKind {
  DimensionMismatch,
  DegenerateGram,
  OutOfInterior,
  NonConformalChart,
  DegenerateMetric,
  FrameDegenerate,
  SignatureFailure,
  NotNormal,
  CriticalPoint,
  WrongCodimension,
  CoincidentPoints,
  UmbilicPoint,
  NonHolomorphicTheta,
  ZeroOfTheta,
  NotSWillmore,
  NotIsothermicChart,
  BlowUp,
  ConsistencyFailure,
  NotSecondEnvelope,
  AmbiguousBranch,
  BasePointMismatch,
  UnknownSurface,
  InvalidInput,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace mobius
