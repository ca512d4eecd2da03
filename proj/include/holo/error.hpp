#pragma once
#include <stdexcept>
#include <string>

namespace holo {

enum class ErrorKind {
  Syntax,
  UnknownPrimitive,
  NonHolonomicInput,
  ConstantSubstitution,
  InsufficientDepth,
  PoleAtExpansionPoint,
  NotHypergeometric,
  OrderExceeded,
  ExtendedAlgorithmRequired,
  InadmissibleOrder,
  NoKFreeElement,
  NoXFreeElement,
  DegreeBoundExceeded,
  SingularPoint,
  NotTwoTerm,
  DiagnosticAbort,
  RingMismatch,
  Usage,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace holo
