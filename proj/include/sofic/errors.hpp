#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sofic {

/// Malformed presentation text. Carries the 1-based line number when known.
class InputError : public std::runtime_error {
public:
  InputError(std::size_t line, const std::string &message)
      : std::runtime_error(line == 0
                               ? message
                               : "line " + std::to_string(line) + ": " +
                                     message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// The presented shift has no bi-infinite sequences.
class EmptyShiftError : public std::runtime_error {
public:
  explicit EmptyShiftError(const std::string &what = "empty shift")
      : std::runtime_error(what) {}
};

/// A computation exceeded a configured size cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant of a constructed object does not hold.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sofic
