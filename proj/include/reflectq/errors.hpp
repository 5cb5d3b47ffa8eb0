#pragma once

#include <stdexcept>
#include <string>

namespace reflectq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact division by a structurally zero scalar
struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

// a substitution made a denominator vanish identically
struct pole_error : error {
    explicit pole_error(const std::string& what) : error(what) {}
};

// truncated series with no trusted nonzero coefficient used as a divisor,
// or a coefficient requested beyond the trusted order
struct series_error : error {
    explicit series_error(const std::string& what) : error(what) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// the parameter conditions force a nonzero constant to vanish
struct inconsistent_system : error {
    explicit inconsistent_system(const std::string& what) : error(what) {}
};

// no parameter values reach the requested solution-space dimension
struct underdetermined_system : error {
    explicit underdetermined_system(const std::string& what) : error(what) {}
};

}  // namespace reflectq
