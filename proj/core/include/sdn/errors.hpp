#pragma once

#include <stdexcept>
#include <string>

namespace sdn {

/// Malformed self-delimiting data: a unary prefix or payload runs past the
/// end of the sequence, or a container header is invalid.
class CorruptSequence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Appending would exceed the fixed capacity of a sequence.
class ContainerFull : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A parameter (tau, table size, ...) is outside the supported range.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input that is not a tree, a malformed tree file, or an out-of-range color.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was checked and found violated.
class PreconditionViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class IteratorExhausted : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

} // namespace sdn
