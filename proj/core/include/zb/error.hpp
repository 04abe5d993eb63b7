#pragma once

#include <stdexcept>
#include <string>

namespace zb {

// Malformed or out-of-range user input (bad edge list, point off the grid,
// unsupported grid shape).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured limit was hit: vertex limit, search budget, mask width.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that should be impossible happened. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zb
