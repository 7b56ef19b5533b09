#pragma once

#include <stdexcept>
#include <string>

namespace theta {

// Malformed or out-of-contract input (CLI exit code 2).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A computed quantity broke a structural invariant (CLI exit code 3).
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw input_error(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw invariant_violation(what);
}

}  // namespace theta
