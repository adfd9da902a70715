#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace braidkit {

// Generators commute when their indices differ by more than one.
inline bool commute(int x, int y) {
  const int d = (x < 0 ? -x : x) - (y < 0 ? -y : y);
  return d > 1 || d < -1;
}

// Positions of the letters that survive cancelling w against a later -w
// whenever everything in between commutes with w.  Only deletions happen,
// so the surviving letters keep their relative order.
std::vector<std::size_t> cancel_indices(std::span<const int> word);
std::vector<int> cancel_word(std::span<const int> word);

// Cancellation plus braid-relation rewrites that pay off within a short
// lookahead.  Never lengthens the word.
std::vector<int> compact_word(std::span<const int> word);

}  // namespace braidkit
