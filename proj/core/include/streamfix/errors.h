#ifndef STREAMFIX_ERRORS_H_
#define STREAMFIX_ERRORS_H_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace streamfix {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed program, formula or stream text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::set<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }
  // Message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

// An argument violates an operation's precondition (non-normal head, t not in
// T, D not a substream of I, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the instance is larger than the
// configured cap.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t count, std::size_t bound);

  std::size_t count() const { return count_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t count_;
  std::size_t bound_;
};

}  // namespace streamfix

#endif  // STREAMFIX_ERRORS_H_
