#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixlab {

enum class ErrorKind {
  DimensionMismatch,
  DomainMismatch,
  OutOfRange,
  InvalidArgument,
  Guard,
  Schema,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto exit codes and callers can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace mixlab
