#pragma once

#include <stdexcept>
#include <string>

namespace ck {

// Violated internal invariant (e.g. a division that must be exact is not).
// Always a bug in this library, never a user error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// A computation was refused because it would exceed a configured cap
// (e.g. explicit enumeration of a Weyl group of too large a rank).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ck
