#ifndef POLYFAM_ERRORS_HPP
#define POLYFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyfam {

/// A configured size guard (field order, vertex count, subset count, ...)
/// would be exceeded. Recoverable by raising the corresponding limit.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed: two independent computations of the same
/// object disagree, or a proven bound is violated. Always a bug, never a
/// property of the input.
class internal_check_error : public std::logic_error {
public:
    explicit internal_check_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polyfam

#endif
