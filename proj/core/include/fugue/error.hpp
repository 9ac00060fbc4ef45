#pragma once

#include <stdexcept>
#include <string>

namespace fugue {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched domains: alphabets, carriers, middle categories, ...
class TypeError : public Error {
public:
  using Error::Error;
};

/// Structurally broken input: partial tables, letters outside an alphabet.
class MalformedInputError : public Error {
public:
  using Error::Error;
};

/// A declared invariant does not hold (monoid laws, category laws, ...).
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// The operation was called in a mode it does not support.
class UsageError : public Error {
public:
  using Error::Error;
};

/// An enumeration or materialisation exceeds its configured limit.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation failed.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Syntax error while reading a document, with 1-based position.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& msg)
      : Error(msg), line(line), column(column) {}
  int line;
  int column;
};

/// A name used in a document does not resolve to a definition.
class UnresolvedReference : public Error {
public:
  using Error::Error;
};

} // namespace fugue
