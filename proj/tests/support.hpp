#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "braidkit/action.hpp"
#include "braidkit/braid.hpp"
#include "braidkit/loop.hpp"
#include "braidkit/matrix.hpp"
#include "braidkit/trajectory.hpp"

namespace testsupport {

using namespace braidkit;

inline Loop loop_of(std::initializer_list<long> c, bool basepoint = false) {
  std::vector<long> v(c);
  return Loop::from_ints(v, basepoint);
}

inline Loop random_loop(std::mt19937_64& rng, int punctures, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  const auto m = static_cast<std::size_t>(punctures - 2);
  std::vector<Int> c(2 * m);
  do {
    for (auto& x : c) x = d(rng);
  } while (std::all_of(c.begin(), c.end(), [](const Int& x) { return sgn(x) == 0; }));
  return Loop(c);
}

inline std::vector<int> random_word(std::mt19937_64& rng, int n, std::size_t len) {
  std::uniform_int_distribution<int> d(1, n - 1);
  std::bernoulli_distribution s(0.5);
  std::vector<int> w(len);
  for (auto& x : w) x = d(rng) * (s(rng) ? 1 : -1);
  return w;
}

// Cofactor expansion; exponential, only for small matrices.
inline Int cofactor_det(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const Int term = a[0][j] * cofactor_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline Int det_shifted(const IntMatrix& m, long x) {
  std::vector<std::vector<Int>> a(m.dim(), std::vector<Int>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      a[i][j] = (i == j ? Int(x) : Int(0)) - m(i, j);
  return cofactor_det(a);
}

inline Int eval_poly(const std::vector<Int>& highest_first, long x) {
  Int acc = 0;
  for (const auto& c : highest_first) acc = acc * x + c;
  return acc;
}

// Trajectories that trace out the braid diagram of `word`: particles sit on
// the x axis at 0, 1, ..., n-1 and each generator swaps a neighbouring pair
// along an ellipse, the left particle passing through y > 0 for sigma_i.
// `per` samples are taken per generator (never at the exact moment the two
// x coordinates agree).
inline TrajectorySet diagram_trajectories(const std::vector<int>& word, int n,
                                          int per = 5, double dt = 1.0,
                                          double height = 0.5) {
  TrajectorySet ts;
  std::vector<double> x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 0.0);
  // particle at each position
  std::vector<int> at(static_cast<std::size_t>(n));
  std::iota(at.begin(), at.end(), 0);
  auto snapshot = [&](double t, const std::vector<std::array<double, 2>>& pos) {
    ts.times.push_back(t);
    ts.positions.push_back(pos);
  };
  std::vector<std::array<double, 2>> pos(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(p)] = {static_cast<double>(p), 0.0};
  double t = 0;
  for (int g : word) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    const int left = at[i], right = at[i + 1];
    const double c = static_cast<double>(i) + 0.5;
    const double s = g > 0 ? 1.0 : -1.0;
    for (int k = 0; k < per; ++k) {
      const double th = std::numbers::pi * k / per;
      pos[static_cast<std::size_t>(left)] = {c - 0.5 * std::cos(th), s * height * std::sin(th)};
      pos[static_cast<std::size_t>(right)] = {c + 0.5 * std::cos(th), -s * height * std::sin(th)};
      snapshot(t + dt * k / per, pos);
    }
    pos[static_cast<std::size_t>(left)] = {c + 0.5, 0.0};
    pos[static_cast<std::size_t>(right)] = {c - 0.5, 0.0};
    std::swap(at[i], at[i + 1]);
    t += dt;
  }
  snapshot(t, pos);
  return ts;
}

// Sorted cycle lengths of a permutation given as perm[i] = image of i+1.
inline std::vector<int> cycle_type(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

inline double brute_assignment(const std::vector<std::vector<double>>& cost) {
  std::vector<int> p(cost.size());
  std::iota(p.begin(), p.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += cost[i][static_cast<std::size_t>(p[i])];
    best = std::min(best, s);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace testsupport
