#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Bad user input: unknown labels, out-of-range parameters, malformed grids.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical invariant was violated (non-Hermitian input, negative measure, ...).
class NumericDomainError : public std::domain_error {
public:
    explicit NumericDomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qcorr
