#pragma once

#include <stdexcept>
#include <string>

namespace sumfree {

enum class ErrorCode {
  kInvalidModulus,
  kCapacity,
  kInvalidElement,
  kMismatch,
  kInvalidArgument,
  kPrecondition,
  kNotApplicable,
  kInvalidShard,
  kInvalidPrime,
  kInternal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sumfree
