#pragma once

#include <gmpxx.h>

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace braidkit {

using Int = mpz_class;
using Rational = mpq_class;

inline Int pos(const Int& x) { return sgn(x) > 0 ? x : Int(0); }
inline Int neg(const Int& x) { return sgn(x) < 0 ? x : Int(0); }
inline double pos(double x) { return x > 0 ? x : 0.0; }
inline double neg(double x) { return x < 0 ? x : 0.0; }

// Natural log of a positive big integer without overflowing a double.
inline double log_int(const Int& x) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

inline std::vector<Int> to_ints(std::span<const long> v) {
  return {v.begin(), v.end()};
}

}  // namespace braidkit
