#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropmoment {

enum class ErrorCode {
  NotSymmetric,
  NotPositiveDefinite,
  DimensionMismatch,
  DegeneratePolytope,
  DisconnectedGraph,
  RankZero,
  InvalidGraph,
  NonPositiveImaginaryPart,
  NegativeOrder,
  AtDivisor,
  BadModulus,
  OutOfRange,
  ParseError,
  SchemaError,
  DomainError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. `module` names
// the component that raised it; `path` is a JSON pointer-like location when the
// error originates from parsed input, and empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, std::string message,
        std::string path = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        module_(std::move(module)),
        path_(std::move(path)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string module_;
  std::string path_;
};

}  // namespace tropmoment
