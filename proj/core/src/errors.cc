#include "streamfix/errors.h"

#include <sstream>

namespace streamfix {
namespace {

std::string FormatParseError(const std::string& message, std::size_t line,
                             std::size_t column,
                             const std::set<std::string>& expected) {
  std::ostringstream out;
  out << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    out << " (expected one of:";
    for (const auto& token : expected) out << " " << token;
    out << ")";
  }
  return out.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column, std::set<std::string> expected)
    : Error(FormatParseError(message, line, column, expected)),
      detail_(message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

BoundExceeded::BoundExceeded(const std::string& what, std::size_t count,
                             std::size_t bound)
    : Error(what + ": " + std::to_string(count) + " exceeds the bound of " +
            std::to_string(bound)),
      count_(count),
      bound_(bound) {}

}  // namespace streamfix
