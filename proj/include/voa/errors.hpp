#pragma once

#include <stdexcept>
#include <string>

namespace voa {

enum class ErrorKind {
  MixedWeight,
  ZeroState,
  UnknownGenerator,
  ModuleNotRegistered,
  InvalidLattice,
  InvalidCocycle,
  UnregisteredCoset,
  RankTooSmall,
  InvalidSpec,
  NonIntegerWeight,
  BudgetExceeded,
  UnboundedRecursion,
  DenseTooLarge,
  UnknownExperiment,
  InvalidConfig,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace voa
