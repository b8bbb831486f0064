#pragma once

#include <stdexcept>
#include <string>

namespace crylift {

// Exit codes shared by every CLI subcommand.
enum class ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kMalformedInput = 2,
  kInfeasible = 3,
  kInternal = 4,
};

/// Input that violates a documented precondition or schema (bad range,
/// wrong length, non-canonical representation).
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input for which the requested object does not exist
/// (mismatched totals, failed congruence, incompatible characters).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal postcondition failed. Never expected; indicates a bug.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantBreach(what);
}

}  // namespace crylift
