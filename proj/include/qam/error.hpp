#pragma once

#include <stdexcept>
#include <string>

namespace qam {

// Two error families, matching the CLI exit-code split:
// validation (bad inputs, domain violations) and numeric
// (bracket exhaustion, quadrature breakdown, failed inversion).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace qam
