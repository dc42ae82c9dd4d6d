// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_ERROR_HPP
#define RADIOMAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace radiomap {

// Malformed input file. Message carries "<file>:<line>: <what>".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(file), line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

// Violated domain invariant or precondition.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radiomap

#endif  // RADIOMAP_ERROR_HPP
