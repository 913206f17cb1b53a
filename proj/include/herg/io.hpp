#pragma once

// Text format for Hergs. UTF-8 lines, '#' starts a comment, tokens are
// [A-Za-z0-9_]+. The first non-comment line is "herg 1", followed by
//   vertex NAME : DART*
//   edge NAME : DART DART [twisted]
//   half NAME : DART
// The dart order in a vertex line is the cyclic rotation order.

#include <string>

#include "herg/herg.hpp"

namespace herg {

class ParseError : public HergError {
public:
    ParseError(int line, const std::string& msg)
        : HergError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

Herg parse(const std::string& text);
Herg parse_file(const std::string& path);

// Vertices, then edges, then halves, each sorted by label.
std::string serialize(const Herg& g);

void write_file(const std::string& path, const std::string& text);

}  // namespace herg
