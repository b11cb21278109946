#ifndef INEXP_ERRORS_HPP
#define INEXP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace inexp {

/// Violated precondition or malformed input (dimension mismatch, singular
/// matrix, infinite level, ...). Maps to exit code 1 in the CLI.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A guarantee the library itself is responsible for failed (reduction budget
/// exhausted, interpolation validation failed). Always a bug, never user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Syntax error in a polynomial expression; carries a 0-based offset into the
/// source string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace inexp

#endif
