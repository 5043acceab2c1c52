#pragma once

#include <stdexcept>
#include <string>

namespace qbank {

/// Parse failure with the 1-based input line it happened on. The message
/// carries the line number and what the parser expected there.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& expected)
        : std::runtime_error("line " + std::to_string(line) + ": " + expected), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace qbank
