#pragma once

#include "braidkit/braid.hpp"
#include "braidkit/loop.hpp"

namespace braidkit {

struct EntropyResult {
  double value = 0.0;  // natural log per application of the braid
  bool converged = false;
  int iterations = 0;
};

/// Estimates topological entropy by repeatedly acting on the canonical
/// basepoint loop in floating point, renormalizing every iteration.  Stops
/// once `window` successive growth rates agree to within tol.  When that
/// never happens the value is reported as 0.
EntropyResult entropy(const Braid& b, double tol = 1e-6, int maxit = 1000,
                      int window = 5);

/// log(minlength(b^k l) / minlength(l)) / k with exact coordinates.
double entropy_fixed_iterates(const Braid& b, const Loop& l, int k);

/// log2 of the growth of intaxis after one application to the canonical
/// basepoint loop.
double complexity(const Braid& b);

}  // namespace braidkit
