#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace erlab {

/// Base class for all errors thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed an argument outside the documented domain.
class argument_error : public error {
 public:
  using error::error;
};

/// An exact integer computation would have overflowed its accumulator.
class arithmetic_overflow_error : public error {
 public:
  using error::error;
};

/// A structural precondition failed; the message names the violated clause.
class structural_error : public error {
 public:
  using error::error;
};

/// A request exceeded a configured size cap; the message names the cap.
class capacity_error : public error {
 public:
  using error::error;
};

/// Malformed text input. byte_offset() points at the offending byte.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t byte_offset)
      : error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Result-cache file problems that are not recoverable by skipping a line.
class cache_error : public error {
 public:
  using error::error;
};

/// The Steps 1-4 rebuild does not apply to the given partitioned graph.
class normalization_error : public error {
 public:
  using error::error;
};

}  // namespace erlab
