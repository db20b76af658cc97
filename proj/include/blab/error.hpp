#pragma once

#include <stdexcept>
#include <string>

namespace blab {

enum class Errc {
  NotTriangular,
  NotSphere,
  Disconnected,
  MalformedPermutation,
  NotFlippable,
  ResourceLimit,
  EmptySet,
  DegenerateWindow,
  ParseError,
  VersionMismatch,
  InsufficientData,
  InvalidArgument,
};

const char* errc_name(Errc c);

/// Error with a machine-readable code; ParseError additionally carries the
/// 1-based line number of the offending input line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int line = -1)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  Errc code_;
  int line_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, int line = -1) {
  throw Error(code, msg, line);
}

}  // namespace blab
