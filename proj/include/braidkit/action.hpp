#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "braidkit/braid.hpp"
#include "braidkit/loop.hpp"
#include "braidkit/matrix.hpp"

namespace braidkit {

/// Integer matrix of the linear branch the action took on a given loop:
/// M * coords(l) == coords(b l).
using LinearAction = IntMatrix;

/// One generator (g > 0 for sigma_g, g < 0 for its inverse) acting on a
/// loop with N punctures; requires 1 <= |g| <= N - 1.
Loop apply_generator(const Loop& l, int g);

/// Acts on l with every generator of b in the order set by GenLoopActDir.
/// b may have fewer strands than l has (non-basepoint) punctures; the
/// remaining punctures are left in place.
Loop act(const Braid& b, const Loop& l);

/// Elementwise over a batch.  threads > 1 splits the work; output order
/// always matches the input.
std::vector<Loop> act(const Braid& b, std::span<const Loop> loops,
                      unsigned threads = 1);

std::pair<Loop, LinearAction> act_with_matrix(const Braid& b, const Loop& l);

/// b acting on the canonical basepoint loop.  Two braids are equal exactly
/// when these agree.
Loop loopcoords(const Braid& b);

enum class CycleMode { per_iterate, product };

struct CycleResult {
  int preperiod = 0;
  int period = 0;
  // One matrix per iterate of the cycle, or their product (latest applied
  // on the left) in product mode.
  std::vector<LinearAction> matrices;
};

/// Iterates l <- b l until the sequence of effective matrices repeats.
/// A period p is accepted once three consecutive copies agree; the reported
/// start is the earliest iterate from which the repetition holds.
/// Throws NoCycleError if nothing repeats within maxit iterations.
CycleResult cycle(const Braid& b, std::optional<Loop> l0 = std::nullopt,
                  int maxit = 1000, CycleMode mode = CycleMode::per_iterate);

/// det(xI - M), highest degree first (division-free Berkowitz algorithm).
std::vector<Int> charpoly(const IntMatrix& m);

/// Largest eigenvalue modulus.
double spectral_radius(const IntMatrix& m);

}  // namespace braidkit
