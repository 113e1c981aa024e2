#pragma once

#include <stdexcept>
#include <string>

namespace kempe {

// Violation of an internal invariant (bound breach, bijection failure, broken
// postcondition). Distinct from std::invalid_argument, which signals bad user
// input; the CLI maps invariant_error to exit code 1 and input errors to 2.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

} // namespace kempe
