#pragma once

#include <stdexcept>

namespace pellfrac {

// Soft analysis failures: the input is valid, but no classification could be
// produced.  Callers (notably the CLI) distinguish these from precondition
// violations, which surface as std::invalid_argument / std::domain_error.
struct no_known_family : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct no_stable_signature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The continued fraction expansion does not have the (preperiod, period)
// shape required by the caller.
struct signature_mismatch : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace pellfrac
