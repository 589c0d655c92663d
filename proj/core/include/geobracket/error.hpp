#ifndef GEOBRACKET_ERROR_HPP
#define GEOBRACKET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace geobracket {

enum class ErrorKind {
  NotHyperbolic,
  CoincidentLines,
  PointNotOnLine,
  PointNotOnAxis,
  DegenerateProduct,
  IdentityClass,
  NonPrimitive,
  OddCount,
  TangentDegenerate,
  InvalidSurface,
  UnknownSurface,
  ParseError,
  ConsistencyError,
  VertexMismatch,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace geobracket

#endif  // GEOBRACKET_ERROR_HPP
