#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vb0 {

// Every failure mode the library reports deliberately.  CLI maps kinds to
// exit codes: caps -> 3, failed checks -> 1, input problems -> 2.
enum class ErrorKind {
  NonAssociative,
  NoIdentity,
  NoInverse,
  NotClosed,
  BadElement,
  NotNormal,
  NotAbelian,
  NotSubgroup,
  NotHomomorphism,
  ClosureCapExceeded,
  TableCapExceeded,
  CosetCapExceeded,
  EvalCapExceeded,
  CapExceeded,
  SyntaxError,
  VariableReuse,
  MissingAssignment,
  RelatorNotKilled,
  IncompleteTable,
  KappaInconsistent,
  InternalDisagreement,
  InconsistentSpan,
  HypothesisFailed,
  BadFormat,
  IoError,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline bool is_cap_error(const Error& e) {
  switch (e.kind) {
    case ErrorKind::ClosureCapExceeded:
    case ErrorKind::TableCapExceeded:
    case ErrorKind::CosetCapExceeded:
    case ErrorKind::EvalCapExceeded:
    case ErrorKind::CapExceeded:
      return true;
    default:
      return false;
  }
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace vb0
