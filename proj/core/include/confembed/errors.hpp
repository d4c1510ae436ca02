#pragma once

#include <stdexcept>
#include <string>

namespace confembed {

/// Invalid user-facing input: bad type string, rank out of range for the
/// family, a weight that is not dominant/integral where required, a level
/// sitting on a Sugawara pole, and so on.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A structural invariant failed (dimension bookkeeping, a Casimir
/// eigenvalue depending on the grading component, ...). These indicate a
/// construction bug, never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace confembed
