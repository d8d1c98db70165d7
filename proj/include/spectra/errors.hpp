#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spectra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring expression. `position()` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An element-level brute force was requested on a ring larger than the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t cardinality, std::size_t cap)
      : Error("ring has " + (cardinality == UINT64_MAX ? std::string("more than 2^64") : std::to_string(cardinality)) +
              " elements, above the enumeration cap " + std::to_string(cap)),
        cardinality_(cardinality),
        cap_(cap) {}

  std::uint64_t cardinality() const noexcept { return cardinality_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cardinality_;
  std::size_t cap_;
};

/// An operation's precondition does not hold for its input (non-local factor, improper filter, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace spectra
