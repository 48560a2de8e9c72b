#pragma once

#include "surfres/error.hpp"
#include "surfres/tripoly.hpp"

#include <cstddef>
#include <string_view>

namespace surfres {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

  /// Byte offset into the original input.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses an equation such as "Z^5 + X^2*Y*Z^3 + X^3*Y^3".
///
/// Terms are `[c][*]X^i[*]Y^j[*]Z^k` joined by + and -, where c is an
/// integer or p/q. Whitespace is ignored everywhere. Parenthesized
/// subexpressions with integer powers, e.g. "Z^2 + (X-Y)^3 + X^4", are also
/// accepted and expanded.
TriPoly parse_poly(std::string_view text);

}  // namespace surfres
