#pragma once

#include <stdexcept>
#include <string>

namespace leraytk {

// Malformed arguments: unknown vertex ids, simplices outside a complex,
// partitions that violate the 0-dimensional-parts condition, and so on.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable size guard (simplex count, vertex count, subfamily cap)
// would be exceeded. Callers may retry with a larger guard or a cheaper
// algorithm.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schema or syntax violation while reading an instance file. The message
// carries the JSON path of the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace leraytk
