#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "braidkit/bigint.hpp"

namespace braidkit {

/// An equivalence class of essential simple closed multiloops on the
/// punctured disk, stored as Dynnikov coordinates (a_1..a_m, b_1..b_m).
///
/// The disk has N = m + 2 punctures.  With a basepoint the last puncture is
/// fixed and stands in for the boundary, so only n = N - 1 punctures are
/// visible to braids.
class Loop {
 public:
  Loop() = default;
  explicit Loop(std::vector<Int> coords, bool basepoint = false);
  static Loop from_ints(std::span<const long> coords, bool basepoint = false);

  const std::vector<Int>& coords() const { return coords_; }
  std::span<const Int> a() const { return {coords_.data(), m()}; }
  std::span<const Int> b() const { return {coords_.data() + m(), m()}; }
  std::size_t m() const { return coords_.size() / 2; }
  int totaln() const { return static_cast<int>(m()) + 2; }
  int n() const { return basepoint_ ? totaln() - 1 : totaln(); }
  bool basepoint() const { return basepoint_; }

  bool operator==(const Loop&) const = default;

 private:
  std::vector<Int> coords_{0, -1};
  bool basepoint_ = false;
};

/// a = 0, b = -1.  With a basepoint these generate the fundamental group of
/// the n-punctured disk; braids acting on them are determined uniquely.
Loop canonical_loop(int n, bool basepoint);

struct IntersectionNumbers {
  std::vector<Int> mu;  // 2N - 4 entries
  std::vector<Int> nu;  // N - 1 entries
};

IntersectionNumbers intersec(const Loop& l);
Int minlength(const Loop& l);
Int intaxis(const Loop& l);

std::string to_string(const Loop& l);
std::ostream& operator<<(std::ostream& os, const Loop& l);

// Coordinate functionals shared by the exact and floating-point paths.
// The coordinate vector holds a then b.

template <class T>
std::vector<T> nu_of(std::span<const T> c) {
  const std::size_t m = c.size() / 2;
  using std::abs;
  T cum = 0;
  T mx = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const T bk = c[m + k];
    T v = abs(c[k]) + (bk > 0 ? bk : T(0)) + cum;
    if (k == 0 || v > mx) mx = v;
    cum += bk;
  }
  std::vector<T> nu;
  nu.reserve(m + 1);
  cum = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    nu.push_back(2 * mx - 2 * cum);
    if (i < m) cum += c[m + i];
  }
  return nu;
}

// Crossings with the horizontal axis.  With a basepoint the part of the
// axis beyond the fixed puncture is not counted.
template <class T>
T intaxis_of(std::span<const T> c, bool basepoint) {
  const std::size_t m = c.size() / 2;
  using std::abs;
  const auto nu = nu_of(c);
  T s = abs(c[0]) + abs(c[m - 1]);
  for (std::size_t k = 1; k < m; ++k) s += abs(c[k] - c[k - 1]);
  for (std::size_t k = 0; k < m; ++k) s += abs(c[m + k]);
  s += nu[0] / 2;
  if (!basepoint) s += nu[m] / 2;
  return s;
}

template <class T>
T minlength_of(std::span<const T> c) {
  T s = 0;
  for (const T& v : nu_of(c)) s += v;
  return s;
}

}  // namespace braidkit
