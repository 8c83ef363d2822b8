#pragma once

#include <stdexcept>
#include <string>

namespace naca {

enum class Err {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  SpecMismatch,
  DivisionByZero,
  ZeroInput,
  AllElementsArePowers,
  PrecisionExhausted,
  InsufficientPrecision,
  InsufficientInputPrecision,
  HenselHypothesisFails,
  ResidualCharTwo,
  WildCase,
  NotAFieldExtension,
  MissingRootsOfUnity,
  UnsupportedCase,
  AlgebraMismatch,
  NotProper,
  NormTestInconclusive,
  TooLarge,
  UnknownTheorem,
  SyntaxError,
  ContextMismatch,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace naca
