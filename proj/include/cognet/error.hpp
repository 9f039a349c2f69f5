#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cognet {

// Base for every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: malformed files, invalid arguments, missing resources.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::string file, std::size_t line, const std::string& what)
        : InputError(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

// Structurally invalid content (e.g. a dependency "tree" that is not a tree).
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

// A numerical or statistical procedure could not produce a result.
class AnalysisError : public Error {
public:
    using Error::Error;
};

}  // namespace cognet
