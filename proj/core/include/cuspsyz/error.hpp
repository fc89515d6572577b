#pragma once

#include <stdexcept>
#include <string>

namespace cuspsyz {

enum class ErrorKind {
  MalformedInput,
  DuplicatePoint,
  Precondition,
  NotOnCurve,
  InvalidMap,
  Parse,
  UnsupportedCurve,
  Contradiction,
  Falsification,
  Resource,
  ConstructionFailed,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind) noexcept;

// Process exit code for a failure of the given kind: 2 input, 3 unsupported
// geometry, 4 mathematical contradiction, 5 resource, 1 internal.
int exit_code_for(ErrorKind kind) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cuspsyz
