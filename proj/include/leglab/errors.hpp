#pragma once

#include <stdexcept>
#include <string>

namespace leglab {

/// Input text could not be parsed into one of the supported formats.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parsed but does not describe a valid object (non-generic diagram,
/// open lift, malformed front, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace leglab
