#ifndef RSC_ERRORS_HPP
#define RSC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsc {

/// Precondition violated by caller-supplied data (bad vertex index, wrong field, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request that would exceed a hard memory or enumeration bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the offending 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parameters sit on a boundary excluded by the asymptotic statements (S = 1, beta integral).
class BoundaryCaseError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace rsc

#endif // RSC_ERRORS_HPP
