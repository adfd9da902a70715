#pragma once

#include <cstdlib>
#include <vector>

#include "braidkit/bigint.hpp"

namespace braidkit {

// Piecewise-linear action of one generator on Dynnikov coordinates, stored
// as c = (a_1..a_m, b_1..b_m) on N = m + 2 punctures.  V needs +, -, unary
// minus and pos/neg found by lookup (Int, double, or a branch tracker).
template <class V>
void apply_update(std::vector<V>& c, int g) {
  const std::size_t m = c.size() / 2;
  const std::size_t N = m + 2;
  const std::size_t i = static_cast<std::size_t>(std::abs(g));
  auto A = [&](std::size_t k) -> V& { return c[k - 1]; };
  auto B = [&](std::size_t k) -> V& { return c[m + k - 1]; };
  if (g > 0) {
    if (i == 1) {
      V b1 = A(1) + pos(B(1));
      V a1 = -B(1) + pos(b1);
      A(1) = a1;
      B(1) = b1;
    } else if (i == N - 1) {
      V bm = A(m) + neg(B(m));
      V am = -B(m) + neg(bm);
      A(m) = am;
      B(m) = bm;
    } else {
      const V ap = A(i - 1), an = A(i), bp = B(i - 1), bn = B(i);
      V cc = ap - an - pos(bn) + neg(bp);
      A(i - 1) = ap - pos(bp) - pos(pos(bn) + cc);
      B(i - 1) = bn + neg(cc);
      A(i) = an - neg(bn) - neg(neg(bp) - cc);
      B(i) = bp - neg(cc);
    }
  } else {
    if (i == 1) {
      V b1 = pos(B(1)) - A(1);
      V a1 = B(1) - pos(b1);
      A(1) = a1;
      B(1) = b1;
    } else if (i == N - 1) {
      V bm = neg(B(m)) - A(m);
      V am = B(m) - neg(bm);
      A(m) = am;
      B(m) = bm;
    } else {
      const V ap = A(i - 1), an = A(i), bp = B(i - 1), bn = B(i);
      V d = ap - an + pos(bn) - neg(bp);
      A(i - 1) = ap + pos(bp) + pos(pos(bn) - d);
      B(i - 1) = bn - pos(d);
      A(i) = an + neg(bn) + neg(neg(bp) + d);
      B(i) = bp + pos(d);
    }
  }
}

}  // namespace braidkit
