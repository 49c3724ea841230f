#pragma once

#include <stdexcept>
#include <string>

namespace piblocks {

// Invalid caller-supplied data: malformed permutations, non-normal subgroups,
// composite entries in a prime set. The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation whose precondition is pi-separability was called on a
// non-separable (group, pi) pair.
struct SeparabilityError : InputError {
  using InputError::InputError;
};

// A mathematically guaranteed invariant failed; indicates a bug in this
// library, never in caller data.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact integer arithmetic left the representable range.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace piblocks
