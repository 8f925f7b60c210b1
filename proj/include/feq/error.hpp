#ifndef FEQ_ERROR_HPP
#define FEQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace feq {

enum class ErrorCode {
  InvalidArgument,
  EmptyList,
  OutOfScope,
  InvalidScope,
  InvalidBlock,
  InvalidInclusion,
  InvalidPermutation,
  NotAnNfe,
  UniverseTooSmall,
  Parse,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures that are not "checked" outcomes (reports, amalgamation
// outcomes) surface as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace feq

#endif  // FEQ_ERROR_HPP
