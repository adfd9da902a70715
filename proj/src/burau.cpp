#include "braidkit/burau.hpp"

#include <cstdlib>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

LaurentMatrix LaurentMatrix::identity(std::size_t dim) {
  LaurentMatrix m{dim, std::vector<LaurentPoly>(dim * dim)};
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = LaurentPoly::constant(1);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y) {
  if (x.dim != y.dim) throw Error("Matrix dimensions differ.");
  LaurentMatrix r{x.dim, std::vector<LaurentPoly>(x.dim * x.dim)};
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.dim; ++j)
        r(i, j) = r(i, j) + x(i, k) * y(k, j);
    }
  return r;
}

LaurentPoly determinant(const LaurentMatrix& x) {
  const std::size_t d = x.dim;
  if (d == 0) return LaurentPoly::constant(1);
  LaurentMatrix a = x;
  LaurentPoly prev = LaurentPoly::constant(1);
  bool flip = false;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < d && a(p, k).is_zero()) ++p;
      if (p == d) return {};
      for (std::size_t j = 0; j < d; ++j) std::swap(a(k, j), a(p, j));
      flip = !flip;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = {};
    }
    prev = a(k, k);
  }
  return flip ? -a(d - 1, d - 1) : a(d - 1, d - 1);
}

namespace {

LaurentMatrix generator_matrix(int g, std::size_t dim) {
  LaurentMatrix m = LaurentMatrix::identity(dim);
  const std::size_t c = static_cast<std::size_t>(std::abs(g)) - 1;
  const LaurentPoly minus_one = LaurentPoly::constant(-1);
  const LaurentPoly minus_t = LaurentPoly::monomial(-1, 1);
  const LaurentPoly minus_tinv = LaurentPoly::monomial(-1, -1);
  const LaurentPoly& above = g > 0 ? minus_t : minus_one;
  const LaurentPoly& diag = g > 0 ? minus_t : minus_tinv;
  const LaurentPoly& below = g > 0 ? minus_one : minus_tinv;
  if (c > 0) m(c - 1, c) = above;
  m(c, c) = diag;
  if (c + 1 < dim) m(c + 1, c) = below;
  return m;
}

}  // namespace

LaurentMatrix burau(const Braid& b) {
  const auto dim = static_cast<std::size_t>(b.n() - 1);
  LaurentMatrix m = LaurentMatrix::identity(dim);
  for (int g : b.word()) m = m * generator_matrix(g, dim);
  return m;
}

RationalMatrix evaluate(const LaurentMatrix& m, const Rational& t) {
  RationalMatrix r{m.dim, {}};
  r.entries.reserve(m.entries.size());
  for (const auto& e : m.entries) r.entries.push_back(eval_at(e, t));
  return r;
}

RationalMatrix burau_at(const Braid& b, const Rational& t) {
  return evaluate(burau(b), t);
}

LaurentPoly alexander(const Braid& b, bool centered) {
  const LaurentMatrix m = burau(b);
  LaurentMatrix diff = LaurentMatrix::identity(m.dim);
  for (std::size_t k = 0; k < diff.entries.size(); ++k)
    diff.entries[k] = diff.entries[k] - m.entries[k];
  const LaurentPoly one_minus_t = LaurentPoly::from_ints(0, {1, -1});
  std::vector<long> tn(static_cast<std::size_t>(b.n()) + 1, 0);
  tn.front() = 1;
  tn.back() = -1;
  LaurentPoly p = exact_div(determinant(diff) * one_minus_t,
                            LaurentPoly::from_ints(0, tn));
  if (!centered || p.is_zero()) return p;
  const long span = p.highest() + p.lowest();
  if (span % 2 != 0) throw FractionalPowerError();
  return shift(p, -span / 2);
}

std::string to_string(const LaurentMatrix& m, const std::string& var) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim; ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.dim; ++j)
      os << (j ? ", " : " ") << to_string(m(i, j), var);
    os << " ]\n";
  }
  return os.str();
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace braidkit
