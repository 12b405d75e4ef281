#include "acvf/error.hpp"

namespace acvf {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::kValNonzero: return "VAL_NONZERO";
    case ErrorCode::kEmptyInput: return "EMPTY_INPUT";
    case ErrorCode::kSingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::kValueGroup: return "VALUE_GROUP";
    case ErrorCode::kNotSemilattice: return "NOT_SEMILATTICE";
    case ErrorCode::kNotInjective: return "NOT_INJECTIVE";
    case ErrorCode::kNotAGroup: return "NOT_A_GROUP";
    case ErrorCode::kNotTriangular: return "NOT_TRIANGULAR";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kBackendMismatch: return "BACKEND_MISMATCH";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kMalformed: return "MALFORMED";
  }
  return "UNKNOWN";
}

bool is_input_error(ErrorCode code) {
  return code == ErrorCode::kBackendMismatch ||
         code == ErrorCode::kDimensionMismatch ||
         code == ErrorCode::kMalformed;
}

}  // namespace acvf
