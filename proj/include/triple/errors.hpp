#ifndef TRIPLE_ERRORS_HPP
#define TRIPLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace triple {

enum class Err {
  ZeroPolynomial,
  ValueAtOneIsZero,
  NotPrimePower,
  UnsupportedDegree,
  RootAtZero,
  NotCoprime,
  DivisionByZero,
  DimensionTooSmall,
  DimensionMismatch,
  ResourceGuard,
  InvalidKindCondition,
  PairingNotCoprime,
  NotIrreducible,
  NormalizationFailure,
  NotSorted,
  NotInStabilizer,
  RingMismatch,
  ModuleMismatch,
  IncompatibleLinkings,
  ParseError,
  InternalError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace triple

#endif
