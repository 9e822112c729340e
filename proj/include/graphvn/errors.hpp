#pragma once

#include <stdexcept>
#include <string>

namespace graphvn {

// Error categories map onto the CLI's sysexits-style bands.
enum class ErrorCode {
    Usage = 64,
    Parse = 65,
    Invariant = 70,
    Numeric = 74,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what, int line = -1)
        : Error(ErrorCode::Parse, line >= 0 ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}
    int line;
};

struct InvariantError : Error {
    explicit InvariantError(const std::string& what) : Error(ErrorCode::Invariant, what) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(ErrorCode::Numeric, what) {}
};

}  // namespace graphvn
