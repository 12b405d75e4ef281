#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acvf {

/// Domain error codes. The CLI reports these by name.
enum class ErrorCode {
  kPrecisionExhausted,
  kValNonzero,
  kEmptyInput,
  kSingularMatrix,
  kValueGroup,
  kNotSemilattice,
  kNotInjective,
  kNotAGroup,
  kNotTriangular,
  kDivisionByZero,
  kBackendMismatch,
  kDimensionMismatch,
  kMalformed,
};

std::string_view error_name(ErrorCode code);

/// True for errors caused by ill-formed input rather than by the mathematics
/// of a well-formed request.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

}  // namespace acvf
