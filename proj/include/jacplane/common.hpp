#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacplane {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Bad user input (malformed text, violated preconditions).  CLI exit code 1.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A consistency failure that survives prime escalation, or library misuse.
// CLI exit code 2.
class InternalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& msg, std::size_t byte_offset)
      : InputError(msg + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// n(n-1)/2 as a polynomial in n, valid for negative n as well.  Euler
// characteristics of bundle twists are polynomials, so the identities that
// use this must not clamp at zero.
inline i64 binom2(i64 n) { return n * (n - 1) / 2; }

}  // namespace jacplane
