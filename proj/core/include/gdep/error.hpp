#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdep {

/// Failure codes raised by engine operations. Validation findings are not
/// errors; they come back as Diagnostic values.
enum class ErrorCode {
  E_PARSE,
  E_EMPTY,
  E_NO_COVERAGE,
  E_UNKNOWN_KIND,
  E_BAD_CONTAINER,
  E_UNKNOWN_PARENT,
  E_KIND_NOT_ALLOWED,
  E_BAD_POSITION,
  E_DOF_VIOLATION,
  E_UNKNOWN_CONSTRUCT,
  E_IS_ROOT,
  E_OUT_OF_VIEWPORT,
  E_DEGENERATE_POLYGON,
  E_INVALID_DEPICTION,
  E_DUP_NAME,
  E_UNKNOWN_FIXTURE,
  E_BAD_LANGUAGE,
  E_BAD_PROGRAM,
  E_IO,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gdep
