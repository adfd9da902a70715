#pragma once

#include <string>
#include <vector>

#include "braidkit/bigint.hpp"
#include "braidkit/braid.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

/// Square matrix with Laurent polynomial entries, row-major.
struct LaurentMatrix {
  std::size_t dim = 0;
  std::vector<LaurentPoly> entries;

  static LaurentMatrix identity(std::size_t dim);
  LaurentPoly& operator()(std::size_t i, std::size_t j) {
    return entries[i * dim + j];
  }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return entries[i * dim + j];
  }
  bool operator==(const LaurentMatrix&) const = default;
};

LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y);
LaurentPoly determinant(const LaurentMatrix& x);

struct RationalMatrix {
  std::size_t dim = 0;
  std::vector<Rational> entries;

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries[i * dim + j];
  }
  bool operator==(const RationalMatrix&) const = default;
};

/// Reduced Burau representation, size (n-1)x(n-1), generator matrices
/// multiplied in word order.
LaurentMatrix burau(const Braid& b);
RationalMatrix burau_at(const Braid& b, const Rational& t);
RationalMatrix evaluate(const LaurentMatrix& m, const Rational& t);

/// Alexander polynomial of the closure of b.  Centering multiplies by the
/// power of t that makes it symmetric, and throws FractionalPowerError when
/// that power is not an integer.
LaurentPoly alexander(const Braid& b, bool centered = false);

std::string to_string(const LaurentMatrix& m, const std::string& var = "t");
std::string to_string(const RationalMatrix& m);

}  // namespace braidkit
