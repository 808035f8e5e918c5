#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordrel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. position is 1-based; 0 means "not tied to a position".
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A precondition on the arguments does not hold (length mismatch, wrong alphabet size, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search or enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wordrel
