#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace balancelab {

// Bad parameter passed to an operation (out-of-range vertex, illegal t, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 input. offset is the byte position of the first bad byte.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Unknown pattern name; the message lists valid names.
class lookup_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request exceeds the exhaustive-search budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem hypothesis or operation precondition does not hold.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace balancelab
