#pragma once

#include <stdexcept>
#include <string>

namespace dfrac {

// Malformed input text (CSV syntax, bad numbers). Carries a line number
// when one is known.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input parsed fine but violates a domain invariant (duplicate hour,
// negative power, inconsistent apparent power, ...).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failures.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dfrac
