#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mocs {

// Argument outside the mathematical domain of an operation (odd q, index out
// of range, mismatched lengths, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A construction was asked for with parameters that violate the theorem's
// hypotheses. Carries the traversal set that was computed and the set it had
// to equal, so callers can explain the rejection.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string what, std::vector<unsigned> found = {},
                      std::vector<unsigned> expected = {})
        : std::runtime_error(std::move(what)), found_(std::move(found)),
          expected_(std::move(expected)) {}

    const std::vector<unsigned>& found() const noexcept { return found_; }
    const std::vector<unsigned>& expected() const noexcept { return expected_; }

private:
    std::vector<unsigned> found_;
    std::vector<unsigned> expected_;
};

// Malformed text input. Line and column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace mocs
