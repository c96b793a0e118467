#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morseflow {

/// Malformed manifold expression text. `position` is a 0-based byte offset
/// into the original input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Summands of a connected sum (or inputs to a polynomial connected sum)
/// disagree on dimension.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of an operation (S^0, n < 2, g < 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

enum class GenusErrorKind { Parity, Negative };

class GenusError : public std::domain_error {
public:
  GenusError(GenusErrorKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  GenusErrorKind kind() const noexcept { return kind_; }

private:
  GenusErrorKind kind_;
};

/// Structurally invalid flow data: wrong count length, negative counts,
/// missing sink or source, dangling connection endpoints.
class MalformedSpec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid simplicial complex data or an unsupported complex operation.
class ComplexError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace morseflow
