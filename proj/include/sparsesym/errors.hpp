#pragma once

#include <stdexcept>
#include <string>

namespace sparsesym {

// Invalid arguments are reported with std::invalid_argument. The types below
// cover the remaining failure classes.

/// A claimed mathematical property failed to hold on concrete data.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An explicit cap (paths, S-pairs, subsets) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational denominator vanished modulo the probe prime.
class RetryWithNewPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sparsesym
