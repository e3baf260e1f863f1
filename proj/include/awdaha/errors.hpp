#pragma once

#include <stdexcept>
#include <string>

namespace awdaha {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BranchCutError : Error { using Error::Error; };
struct NotASquareError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct PoleInDenominatorError : PoleError { using PoleError::PoleError; };
struct DivergenceError : Error { using Error::Error; };
struct MaxTermsExceeded : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegenerateParamsError : Error { using Error::Error; };
struct RelationFailure : Error { using Error::Error; };
struct MethodDomainError : Error { using Error::Error; };
struct SingularPointError : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };
// Invalid user configuration (CLI exit code 2).
struct ConfigError : Error { using Error::Error; };

}  // namespace awdaha
