#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "braidkit/bigint.hpp"

namespace braidkit {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::size_t dim, std::vector<Int> entries);
  static IntMatrix identity(std::size_t dim);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t dim() const { return dim_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  const std::vector<Int>& entries() const { return data_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
std::vector<Int> operator*(const IntMatrix& x, const std::vector<Int>& v);

/// Fraction-free Gaussian elimination.
Int determinant(const IntMatrix& x);

std::string to_string(const IntMatrix& x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& x);

}  // namespace braidkit
