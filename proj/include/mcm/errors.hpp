#pragma once

#include <stdexcept>
#include <string>

namespace mcm {

// Raised when a request is well-formed but exceeds a documented
// computational budget (enumeration too large, table too big, ...).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mcm
