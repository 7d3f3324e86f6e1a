#pragma once

#include <stdexcept>
#include <string>

namespace hk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeterminantError : Error { using Error::Error; };
struct RealityError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct StepError : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct SymmetryViolation : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace hk
