#include "gdep/error.hpp"

namespace gdep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::E_PARSE: return "E_PARSE";
    case ErrorCode::E_EMPTY: return "E_EMPTY";
    case ErrorCode::E_NO_COVERAGE: return "E_NO_COVERAGE";
    case ErrorCode::E_UNKNOWN_KIND: return "E_UNKNOWN_KIND";
    case ErrorCode::E_BAD_CONTAINER: return "E_BAD_CONTAINER";
    case ErrorCode::E_UNKNOWN_PARENT: return "E_UNKNOWN_PARENT";
    case ErrorCode::E_KIND_NOT_ALLOWED: return "E_KIND_NOT_ALLOWED";
    case ErrorCode::E_BAD_POSITION: return "E_BAD_POSITION";
    case ErrorCode::E_DOF_VIOLATION: return "E_DOF_VIOLATION";
    case ErrorCode::E_UNKNOWN_CONSTRUCT: return "E_UNKNOWN_CONSTRUCT";
    case ErrorCode::E_IS_ROOT: return "E_IS_ROOT";
    case ErrorCode::E_OUT_OF_VIEWPORT: return "E_OUT_OF_VIEWPORT";
    case ErrorCode::E_DEGENERATE_POLYGON: return "E_DEGENERATE_POLYGON";
    case ErrorCode::E_INVALID_DEPICTION: return "E_INVALID_DEPICTION";
    case ErrorCode::E_DUP_NAME: return "E_DUP_NAME";
    case ErrorCode::E_UNKNOWN_FIXTURE: return "E_UNKNOWN_FIXTURE";
    case ErrorCode::E_BAD_LANGUAGE: return "E_BAD_LANGUAGE";
    case ErrorCode::E_BAD_PROGRAM: return "E_BAD_PROGRAM";
    case ErrorCode::E_IO: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace gdep
