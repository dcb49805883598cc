#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nafaba {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A value handed to an operation lies outside the domain it is defined on
/// (e.g. an interpretation mentioning atoms the program does not contain).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Brute-force enumeration refused because the candidate space is too large.
class EnumerationLimitError : public Error {
public:
  EnumerationLimitError(std::size_t requested, std::size_t bound)
      : Error("enumeration limit exceeded: " + std::to_string(requested) +
              " symbols requested, bound is " + std::to_string(bound)),
        requested_(requested), bound_(bound) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t bound() const noexcept { return bound_; }

private:
  std::size_t requested_;
  std::size_t bound_;
};

/// The input lies outside the fragment an operation requires.
class FragmentViolation : public Error {
public:
  using Error::Error;
};

/// An ABA framework or program could not be constructed from its parts.
class ConstructionError : public Error {
public:
  using Error::Error;
};

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

inline std::string to_string(const SourceLocation& loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

class ParseError : public Error {
public:
  ParseError(SourceLocation loc, const std::string& message)
      : Error(to_string(loc) + ": " + message), location_(loc), message_(message) {}

  const SourceLocation& location() const noexcept { return location_; }
  const std::string& message() const noexcept { return message_; }

private:
  SourceLocation location_;
  std::string message_;
};

} // namespace nafaba
