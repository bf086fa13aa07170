#pragma once

#include <stdexcept>
#include <string>

namespace tauforms {

// User-facing failure with a stable machine-readable code.  The CLI maps
// these to exit status 1; anything derived from std::logic_error is treated
// as an internal invariant violation and maps to exit status 2.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw error(code, what);
}

inline void check(bool cond, const std::string& code, const std::string& what) {
    if (!cond) fail(code, what);
}

// Internal invariant check; failures indicate a bug, not bad input.
inline void invariant(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("invariant violated: " + what);
}

}  // namespace tauforms
