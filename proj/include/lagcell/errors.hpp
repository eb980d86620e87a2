#pragma once

#include <stdexcept>
#include <string>

namespace lagcell {

// Bad arguments to a combinatorial or algebraic operation.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested size exceeds the configured enumeration bound.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A chain complex failed d^2 = 0 or a similar internal consistency check.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lagcell
