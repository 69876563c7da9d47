#pragma once

#include <stdexcept>
#include <string>

namespace qcausal {

/// Malformed input or a violated precondition (bad range, wrong shape, parse failure).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric invariant of a domain type does not hold (non-normalized
/// distribution, non-Hermitian state, ...). The message names the invariant.
class InvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qcausal
