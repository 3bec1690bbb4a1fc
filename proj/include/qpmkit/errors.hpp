#pragma once

#include <stdexcept>
#include <string>

namespace qpm {

/// Malformed or inconsistent material data file.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside a model's validity domain or violating an invariant.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-posed query with no physical solution (no forward QPM, no
/// non-collinear root, total internal reflection, missing temperature root).
struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qpm
