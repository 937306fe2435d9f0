#pragma once

#include <stdexcept>
#include <string>

namespace gbslide {

// Bad input or violated operation precondition. CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Group-semantic operation applied to a graph presenting a degenerate group
// (edgeless graph, or Euler characteristic >= 0 where a hyperbolic-type
// hypothesis is needed).
class DegenerateGroupError : public InputError {
public:
    explicit DegenerateGroupError(const std::string& msg) : InputError(msg) {}
};

// Search exceeded its node budget. CLI exit code 3.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure; indicates a bug, never a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_input(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace gbslide
