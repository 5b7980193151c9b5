#pragma once

#include <stdexcept>
#include <string>

namespace predraw {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document (syntax, schema, rational literals).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally well-formed input that violates a contract
// (dangling references, duplicate labels, missing normals, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace predraw
