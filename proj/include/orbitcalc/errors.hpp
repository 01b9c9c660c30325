#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orbitcalc {

// Structural/validation failure: malformed input data, broken combinatorial
// preconditions, schema violations. The CLI maps these to exit code 2.
class validation_error : public std::runtime_error {
public:
    validation_error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Numerical failure: an integration or root-finding routine could not
// deliver within its budget or domain. The CLI maps these to exit code 3.
class numeric_error : public std::runtime_error {
public:
    numeric_error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace orbitcalc
