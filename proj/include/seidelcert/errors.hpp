#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seidelcert {

/// Invalid family parameters or operation arguments.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex or matrix index outside the valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input exceeds a configured search or size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A mathematical precondition of an operation does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search that provably never terminates for the given input.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace seidelcert
