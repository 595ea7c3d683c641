#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gks {

/// Bad caller input: malformed orders, out-of-range sizes, refused workloads.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A text or file format violation. Carries the 1-based line when known.
class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The operation needs a capability the strategy does not have
/// (Alice-mode, an outcome enumerator, ...).
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gks
