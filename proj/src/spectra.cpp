#include "braidkit/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "braidkit/action.hpp"
#include "braidkit/error.hpp"
#include "braidkit/properties.hpp"
#include "braidkit/update.hpp"

namespace braidkit {

EntropyResult entropy(const Braid& b, double tol, int maxit, int window) {
  EntropyResult r;
  if (b.n() <= 2) {
    r.converged = true;
    return r;
  }
  const Loop start = canonical_loop(b.n(), true);
  std::vector<double> c;
  for (const Int& v : start.coords()) c.push_back(v.get_d());
  std::vector<int> word = b.word();
  if (props().gen_loop_act_dir == LoopActDir::right_to_left)
    std::reverse(word.begin(), word.end());

  double len0 = intaxis_of<double>(c, true);
  double prev = 0.0;
  int agree = 0;
  for (int it = 1; it <= maxit; ++it) {
    for (int g : word) apply_update(c, g);
    const double len = intaxis_of<double>(c, true);
    const double e = std::log(len / len0);
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    for (double& v : c) v /= scale;
    len0 = len / scale;
    if (it > 1 && std::abs(e - prev) < tol)
      ++agree;
    else
      agree = 0;
    prev = e;
    if (agree >= window) {
      r.value = e;
      r.converged = true;
      r.iterations = it;
      return r;
    }
  }
  r.iterations = maxit;
  return r;
}

double entropy_fixed_iterates(const Braid& b, const Loop& l, int k) {
  if (k < 1) throw Error("The number of iterates must be positive.");
  const Loop img = act(power(b, k), l);
  return (log_int(minlength(img)) - log_int(minlength(l))) / k;
}

double complexity(const Braid& b) {
  const Loop e = canonical_loop(b.n(), true);
  const Rational ratio(intaxis(act(b, e)), intaxis(e));
  return std::log2(ratio.get_d());
}

}  // namespace braidkit
