#pragma once

#include <stdexcept>
#include <string>

namespace newman {

/// Violated mathematical precondition (invalid base, modulus, divisibility, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a deliberate resource guard (e.g. brute-force enumeration cap).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// A checked mathematical identity failed to hold; only thrown by verification
/// routines whose contract is "this must be exact".
class property_violation : public std::logic_error {
public:
    explicit property_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace newman
