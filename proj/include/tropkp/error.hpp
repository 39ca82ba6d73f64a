#pragma once

#include <stdexcept>
#include <string>

namespace tropkp {

enum class ErrorCode {
  InvalidArgument = 1,
  Config = 2,
  Degenerate = 3,
  Domain = 4,
  Numeric = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::InvalidArgument, w) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorCode::Config, w) {}
};
/// Parameters on the locus where a parametrization is undefined.
struct DegenerateParameters : Error {
  explicit DegenerateParameters(const std::string& w) : Error(ErrorCode::Degenerate, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorCode::Numeric, w) {}
};
/// A theorem-level invariant failed; always a bug or a bad input path.
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(ErrorCode::Internal, w) {}
};

}  // namespace tropkp
