#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qdeform/rings.hpp"

namespace qdeform {

struct ParseError : public std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Expressions over the variables q and x with integer literals,
// + - * / ^, parentheses and implicit multiplication ("2q", "(q+1)(q-1)").
RatFuncQX parse_ratfunc_qx(std::string_view text);
// Same grammar; rejects x.
RatFuncQ parse_ratfunc(std::string_view text);

// "r/s", "n", "-r/s"; s may be 0 only when allow_infinity is set.
struct RationalInput {
  BigInt num;
  BigInt den;  // >= 0 after parsing, gcd-reduced; 0 means infinity
};
RationalInput parse_rational(std::string_view text, bool allow_infinity = false);

}  // namespace qdeform
