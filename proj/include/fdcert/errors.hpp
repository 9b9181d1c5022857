#pragma once

#include <stdexcept>
#include <string>

namespace fdcert {

// Malformed or out-of-contract input (bad ids, unsorted entries, bad files).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact computation refused to run past its configured budget.
// Never a wrong answer: callers either retry with a larger budget or report.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fdcert
