#pragma once

#include <stdexcept>
#include <string>

namespace knotgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, diagram or script text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line), message_(what) {}
  int line() const { return line_; }
  /// The message without the line prefix.
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

/// An operation was handed an edge, vertex, site or crossing that is not
/// present in its host.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Y-to-triangle move was requested on a site two of whose leaves are
/// adjacent; the move would create a double edge.
class RejectedYbar : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace knotgraph
