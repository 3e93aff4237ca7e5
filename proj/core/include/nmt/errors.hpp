#ifndef NMT_ERRORS_HPP
#define NMT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class ParseErrorKind {
    Syntax,             // malformed input, position points at the offender
    UnknownConnective,  // NAME not declared in the governing signature
    ArityMismatch,      // argument count differs from the declared arity
};

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& what)
        : Error(what), kind_(kind), position_(position) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

// One structural problem found while validating an artifact.
struct Violation {
    std::string where;   // connective / formula / field the problem is attached to
    std::string detail;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(describe(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string describe(const std::vector<Violation>& vs);
    std::vector<Violation> violations_;
};

// Precondition failures: signature mismatches, non-deterministic input to a
// matrix-only procedure, bad variable bounds, reserved-name collisions.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// A configurable safety cap was hit (e.g. the theta fixpoint grew too large).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace nmt

#endif  // NMT_ERRORS_HPP
