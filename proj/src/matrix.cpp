#include "braidkit/matrix.hpp"

#include <ostream>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Int(0)) {}

IntMatrix::IntMatrix(std::size_t dim, std::vector<Int> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim)
    throw Error("Matrix entry count does not match its dimension.");
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error("Matrix must be square.");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.dim() != y.dim()) throw Error("Matrix dimensions differ.");
  const std::size_t d = x.dim();
  IntMatrix r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

std::vector<Int> operator*(const IntMatrix& x, const std::vector<Int>& v) {
  if (x.dim() != v.size()) throw Error("Matrix and vector sizes differ.");
  std::vector<Int> r(v.size(), Int(0));
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) r[i] += x(i, j) * v[j];
  return r;
}

Int determinant(const IntMatrix& x) {
  const std::size_t d = x.dim();
  if (d == 0) return 1;
  IntMatrix a = x;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < d && sgn(a(p, k)) == 0) ++p;
      if (p == d) return 0;
      for (std::size_t j = 0; j < d; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(d - 1, d - 1);
}

std::string to_string(const IntMatrix& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < x.dim(); ++j) os << (j ? " " : "") << x(i, j);
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& x) {
  return os << to_string(x);
}

}  // namespace braidkit
