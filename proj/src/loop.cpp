#include "braidkit/loop.hpp"

#include <ostream>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

Loop::Loop(std::vector<Int> coords, bool basepoint)
    : coords_(std::move(coords)), basepoint_(basepoint) {
  if (coords_.empty() || coords_.size() % 2 != 0)
    throw Error("Loop coordinates must have nonzero even length.");
}

Loop Loop::from_ints(std::span<const long> coords, bool basepoint) {
  return Loop(to_ints(coords), basepoint);
}

Loop canonical_loop(int n, bool basepoint) {
  const int m = basepoint ? n - 1 : n - 2;
  if (m < 1)
    throw Error(basepoint ? "A canonical loop with a basepoint needs n >= 2."
                          : "A canonical loop needs n >= 3.");
  std::vector<Int> c(static_cast<std::size_t>(2 * m), Int(0));
  for (int k = m; k < 2 * m; ++k) c[static_cast<std::size_t>(k)] = -1;
  return Loop(std::move(c), basepoint);
}

IntersectionNumbers intersec(const Loop& l) {
  const auto& c = l.coords();
  const std::size_t m = l.m();
  IntersectionNumbers r;
  r.nu = nu_of<Int>(c);
  r.mu.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const Int h = (r.nu[i] > r.nu[i + 1] ? r.nu[i] : r.nu[i + 1]) / 2;
    r.mu.push_back(h - c[i]);
    r.mu.push_back(h + c[i]);
  }
  return r;
}

Int minlength(const Loop& l) { return minlength_of<Int>(l.coords()); }

Int intaxis(const Loop& l) { return intaxis_of<Int>(l.coords(), l.basepoint()); }

std::string to_string(const Loop& l) {
  std::ostringstream os;
  os << "((";
  for (const Int& v : l.coords()) os << ' ' << v;
  os << " ))";
  if (l.basepoint()) os << '*';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Loop& l) {
  return os << to_string(l);
}

}  // namespace braidkit
