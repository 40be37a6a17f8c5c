#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppclab {

// A series/quadrature routine failed to reach its requested tolerance.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A spectral profile was asked for frequencies beyond its truncation.
struct insufficient_profile : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    parse_error(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    std::size_t line;
};

} // namespace ppclab
