#pragma once

#include <stdexcept>
#include <string>

namespace rootspace {

enum class ErrorKind {
  IllegalType,
  EmptySubset,
  EmptyI,
  NotFiniteType,
  NotAffineType,
  WindowTooSmall,
  InfiniteOrbit,
  NoSingleStep,
  NotAPositiveRoot,
  SearchExhausted,
  NotDominantIntegralOnJ,
  JEqualsWholeSet,
  DimensionTooLarge,
  TooLarge,
  NotSupported,
  NoWordFound,
  Unclassified,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind);

// Domain error carrying a machine-readable kind; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rootspace
