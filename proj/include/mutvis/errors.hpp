#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mutvis {

// Malformed input: bad vertex ids, self-loops, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation that needs a connected graph (or two vertices in the same
// component) was handed something else.
class DisconnectedGraphError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotDistanceHereditaryError : public std::domain_error {
 public:
  NotDistanceHereditaryError(std::size_t remainder_size)
      : std::domain_error("not distance-hereditary: irreducible remainder has " +
                          std::to_string(remainder_size) + " vertices"),
        remainder_size_(remainder_size) {}

  std::size_t remainder_size() const { return remainder_size_; }

 private:
  std::size_t remainder_size_;
};

// Exhaustive oracles refuse graphs above their configured vertex cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace mutvis
