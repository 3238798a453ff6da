#pragma once

#include <stdexcept>
#include <string>

namespace albu {

// File could not be opened or written.
struct FileError : std::runtime_error {
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file content; `line` is 1-based where known, 0 otherwise.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int line_no)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                         : what),
          line(line_no) {}
};

// Inference reached a state with no valid continuation (e.g. an all-zero
// message product).
struct DegenerateStateError : std::runtime_error {
    explicit DegenerateStateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace albu
