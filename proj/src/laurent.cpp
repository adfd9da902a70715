#include "braidkit/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

LaurentPoly::LaurentPoly(long lowest, std::vector<Int> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  lowest_ = coeffs_.empty() ? 0 : lowest_ + static_cast<long>(lead);
}

LaurentPoly LaurentPoly::from_ints(long lowest, const std::vector<long>& coeffs) {
  return {lowest, std::vector<Int>(coeffs.begin(), coeffs.end())};
}

Int LaurentPoly::coeff(long e) const {
  if (is_zero() || e < lowest_ || e > highest()) return 0;
  return coeffs_[static_cast<std::size_t>(e - lowest_)];
}

namespace {

LaurentPoly add_scaled(const LaurentPoly& p, const LaurentPoly& q, int s) {
  if (p.is_zero()) return s > 0 ? q : -q;
  if (q.is_zero()) return p;
  const long lo = std::min(p.lowest(), q.lowest());
  const long hi = std::max(p.highest(), q.highest());
  std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
  for (long e = p.lowest(); e <= p.highest(); ++e)
    c[static_cast<std::size_t>(e - lo)] += p.coeff(e);
  for (long e = q.lowest(); e <= q.highest(); ++e)
    if (s > 0)
      c[static_cast<std::size_t>(e - lo)] += q.coeff(e);
    else
      c[static_cast<std::size_t>(e - lo)] -= q.coeff(e);
  return {lo, std::move(c)};
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  return add_scaled(p, q, 1);
}

LaurentPoly operator-(const LaurentPoly& p) {
  std::vector<Int> c = p.coeffs();
  for (auto& x : c) x = -x;
  return {p.lowest(), std::move(c)};
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return add_scaled(p, q, -1);
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return {p.lowest() + q.lowest(), std::move(c)};
}

LaurentPoly shift(const LaurentPoly& p, long k) {
  return p.is_zero() ? p : LaurentPoly(p.lowest() + k, p.coeffs());
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error("Division by the zero polynomial.");
  if (p.is_zero()) return {};
  // Ordinary polynomial division after clearing the lowest powers; q then
  // has a nonzero constant term, so divisibility is unaffected.
  std::vector<Int> rem = p.coeffs();
  const auto& d = q.coeffs();
  if (rem.size() < d.size())
    throw Error("Polynomial division leaves a remainder.");
  std::vector<Int> quo(rem.size() - d.size() + 1, Int(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Int& top = rem[k + d.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
      throw Error("Polynomial division leaves a remainder.");
    Int f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    quo[k] = f;
  }
  for (const Int& r : rem)
    if (sgn(r) != 0) throw Error("Polynomial division leaves a remainder.");
  return {p.lowest() - q.lowest(), std::move(quo)};
}

Rational eval_at(const LaurentPoly& p, const Rational& t) {
  if (p.is_zero()) return 0;
  if (sgn(t) == 0 && p.lowest() < 0)
    throw Error("Cannot evaluate negative powers at zero.");
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * t + Rational(*it);
  Rational scale = 1;
  const Rational base = p.lowest() < 0 ? Rational(1 / t) : t;
  for (long k = 0; k < std::abs(p.lowest()); ++k) scale *= base;
  Rational r = acc * scale;
  r.canonicalize();
  return r;
}

double eval_at(const LaurentPoly& p, double t) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * t + it->get_d();
  return p.is_zero() ? 0.0 : acc * std::pow(t, static_cast<double>(p.lowest()));
}

std::string to_string(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = p.highest(); e >= p.lowest(); --e) {
    const Int c = p.coeff(e);
    if (sgn(c) == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << (sgn(c) < 0 ? "- " : "+ ");
    const Int mag = abs(c);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var << "^(" << (e > 0 ? "+" : "-") << std::abs(e) << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << to_string(p);
}

}  // namespace braidkit
