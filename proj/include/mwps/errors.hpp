#pragma once

#include <stdexcept>
#include <string>

namespace mwps {

// Error taxonomy shared across the toolkit. The CLI maps these onto exit
// codes: ConfigError -> 2, IoError -> 3, everything else -> 4.

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax-level failure. `line`/`column` are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        std::string out;
        if (line > 0) {
            out += "line " + std::to_string(line) + ": ";
        }
        out += message;
        if (column > 0) {
            out += " (column " + std::to_string(column) + ")";
        }
        return out;
    }

    std::size_t line_;
    std::size_t column_;
};

// Data violates a documented invariant (bad record, failed precondition).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic failure during expression evaluation or solving.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mwps
