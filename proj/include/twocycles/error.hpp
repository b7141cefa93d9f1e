#ifndef TWOCYCLES_ERROR_HPP
#define TWOCYCLES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace twocycles {

enum class ErrorKind {
  IndexOutOfRange,
  CannotDeleteFromSingleton,
  LengthMismatch,
  InvalidSequence,
  Parse,
  DuplicateArc,
  VertexOutOfRange,
  MalformedLine,
  TooManyVertices,
  InvalidParameters,
  SequenceIsLarge,
  UnrealizableDegree,
  InvalidK,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this exception type; `kind()`
// lets callers (the CLI in particular) map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twocycles

#endif
