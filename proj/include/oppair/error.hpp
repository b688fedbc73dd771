#pragma once

#include <stdexcept>

namespace oppair {

// Malformed external input (JSON, expressions, tokens).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed request that the mathematics refuses (illegal blowdown,
// center off the divisor, unknown component, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oppair
