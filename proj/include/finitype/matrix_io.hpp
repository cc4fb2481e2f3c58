#pragma once

#include "finitype/exactmat.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finitype {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Matrix document: the dimension n, then n rows of n integers. '#' starts a
/// comment and blank lines are ignored. Throws ParseError.
SquareIntMatrix parse_matrix(std::string_view text);

/// Reads and parses a file. Throws std::runtime_error if it cannot be read.
SquareIntMatrix read_matrix_file(const std::string& path);

/// Inverse of parse_matrix.
std::string format_matrix(const SquareIntMatrix& m);

}  // namespace finitype
