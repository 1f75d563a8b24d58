#pragma once
#include <stdexcept>
#include <string>

namespace gslab {

// Process exit codes shared by the CLI and the error type below.
enum class Fail : int {
  usage = 2,         // bad arguments or malformed input
  precondition = 3,  // input violates a documented requirement
  tolerance = 4,     // an iteration failed to reach its target accuracy
};

// Every failure carries a stable machine-readable name (e.g. "NoBracket")
// next to the human-readable message, so callers and tests can match on it.
class Error : public std::runtime_error {
public:
  Error(Fail kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  Fail kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int exit_code() const { return static_cast<int>(kind_); }

private:
  Fail kind_;
  std::string name_;
};

[[noreturn]] inline void fail_usage(const std::string& name, const std::string& what) {
  throw Error(Fail::usage, name, what);
}
[[noreturn]] inline void fail_pre(const std::string& name, const std::string& what) {
  throw Error(Fail::precondition, name, what);
}
[[noreturn]] inline void fail_tol(const std::string& name, const std::string& what) {
  throw Error(Fail::tolerance, name, what);
}

}  // namespace gslab
