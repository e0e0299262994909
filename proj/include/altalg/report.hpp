#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altalg/algebra.hpp"

namespace altalg {

/// Concrete counterexample: a sentence naming the failed equation plus the
/// elements involved, in the coordinate syntax the CLI accepts as input.
struct Witness {
  std::string description;
  std::vector<std::pair<std::string, Element>> elements;
};

/// One line of a verification report.
struct CheckRecord {
  std::string check;
  bool pass = true;
  std::optional<Witness> witness;
  std::string detail;
  /// Number of basis instances evaluated.
  std::size_t instances = 0;
};

/// A mathematical property required by an operation does not hold. Carries
/// the witness; the CLI maps it to exit code 1.
class PropertyError : public std::runtime_error {
 public:
  PropertyError(const std::string& what, Witness w) : std::runtime_error(what), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// An exhaustive scan would exceed the configured enumeration budget.
class BudgetExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace altalg
