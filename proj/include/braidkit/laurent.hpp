#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "braidkit/bigint.hpp"

namespace braidkit {

/// Integer Laurent polynomial c_0 t^lowest + c_1 t^(lowest+1) + ...
/// Stored trimmed: first and last coefficients are nonzero, and zero has no
/// coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long lowest, std::vector<Int> coeffs);
  static LaurentPoly constant(const Int& c) { return {0, {c}}; }
  static LaurentPoly monomial(const Int& c, long e) { return {e, {c}}; }
  static LaurentPoly from_ints(long lowest, const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  long lowest() const { return lowest_; }
  long highest() const {
    return lowest_ + static_cast<long>(coeffs_.size()) - 1;
  }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(long e) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  long lowest_ = 0;
  std::vector<Int> coeffs_;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

/// Multiplies by t^k.
LaurentPoly shift(const LaurentPoly& p, long k);

/// p / q when q divides p exactly; throws otherwise.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

Rational eval_at(const LaurentPoly& p, const Rational& t);
double eval_at(const LaurentPoly& p, double t);

/// Highest power first, e.g. "+ z^(+2) - z^(+1) + 1".
std::string to_string(const LaurentPoly& p, const std::string& var = "z");
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace braidkit
