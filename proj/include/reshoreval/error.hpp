#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reshoreval {

/// A numeric precondition was violated, e.g. a raw score outside its observed range.
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Inputs are individually valid but do not fit together (missing factor weights,
/// absent emission factors, ...).
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// One problem found while reading user-supplied files.
struct Diagnostic
{
    std::string file;
    std::size_t row = 0;  // 1-based line number, header is line 1; 0 = whole file
    std::string column;   // column name; empty = whole row or file
    std::string message;

    std::string to_string() const;
};

/// Rejected input. Carries every diagnostic the loader found, not only the first.
class InputError : public std::runtime_error
{
public:
    explicit InputError(std::vector<Diagnostic> diagnostics);
    explicit InputError(const std::string& message);

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace reshoreval
