#pragma once

#include <stdexcept>
#include <string>

namespace qpm {

// Domain-level bad input: out-of-range constants, empty subsets, eps outside
// its interval, mismatched sizes. Maps to CLI exit code 1 or 2 depending on
// the command contract.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed files: bad JSON shape, unparseable rationals, unknown labels.
// Always CLI exit code 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qpm
