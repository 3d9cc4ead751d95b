#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcoloring {

// Malformed input text. `where` is a byte offset for single-line formats and
// a line number for the edge-list format (see the what() text).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t where)
        : std::runtime_error(msg), where_(where) {}
    std::size_t where() const { return where_; }

private:
    std::size_t where_;
};

// Structurally valid input that the loopless multigraph model cannot hold.
class UnsupportedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive routine refused to run because its size guard was exceeded.
// Deliberately distinct from any yes/no decision.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hcoloring
