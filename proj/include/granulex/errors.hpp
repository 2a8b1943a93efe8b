#pragma once

#include <stdexcept>
#include <string>

namespace granulex {

/// Invalid input data: unknown labels, malformed partitions, mismatched
/// universes, duplicate elements.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A request that exceeds a configured resource limit (e.g. brute-force
/// enumeration above the subset cutoff).
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace granulex
