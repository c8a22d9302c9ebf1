#include "linematch/types.hpp"

#include <algorithm>

namespace linematch {

std::string to_string(Cost value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the negative range so the most negative value needs no special case.
  Cost v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

EmptySideError::EmptySideError(Side side)
    : Error(std::string("point set ") + side_char(side) + " is empty"), side_(side) {}

CapOutOfRangeError::CapOutOfRangeError(Side side, std::size_t index, Capacity cap)
    : Error(std::string("capacity of ") + side_char(side) + " point #" + std::to_string(index) +
            " must be >= 1, got " + std::to_string(cap)) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace linematch
