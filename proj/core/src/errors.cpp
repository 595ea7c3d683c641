#include "gks/errors.hpp"

namespace gks {

namespace {

std::string with_line(const std::string& what, std::size_t line) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line)
    : InputError(with_line(what, line)), line_(line) {}

}  // namespace gks
