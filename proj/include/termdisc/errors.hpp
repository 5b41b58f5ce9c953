#pragma once

#include <stdexcept>
#include <string>

namespace termdisc {

// Arithmetic contract violations (division by zero, inexact ring division).
struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation of a rational function at an integer root of its denominator.
struct pole_error : arithmetic_error {
    long long at;
    explicit pole_error(long long n0)
        : arithmetic_error("pole at n = " + std::to_string(n0)), at(n0) {}
};

// Malformed input (bad graph spec, bad parameter ranges, bad file content).
struct parse_error : std::invalid_argument {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos = 0)
        : std::invalid_argument(what), position(pos) {}
};

} // namespace termdisc
