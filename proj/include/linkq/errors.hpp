#pragma once

#include <stdexcept>
#include <string>

namespace linkq {

// A search or enumeration exceeded a configured size limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Rejected text input; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace linkq
