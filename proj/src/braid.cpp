#include "braidkit/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "braidkit/action.hpp"
#include "braidkit/error.hpp"
#include "braidkit/wordops.hpp"

namespace braidkit {

namespace {

int max_index(const std::vector<int>& word) {
  int m = 0;
  for (int w : word) m = std::max(m, std::abs(w));
  return m;
}

void check_word(const std::vector<int>& word, int n) {
  if (n < 1) throw Error("A braid needs at least one strand.");
  for (int w : word) {
    if (w == 0) throw Error("Braid generator index cannot be zero.");
    if (std::abs(w) >= n)
      throw Error("Generator index " + std::to_string(w) +
                  " out of range for " + std::to_string(n) + " strands.");
  }
}

}  // namespace

Braid::Braid(std::vector<int> word) : word_(std::move(word)) {
  n_ = std::max(2, max_index(word_) + 1);
  check_word(word_, n_);
}

Braid::Braid(std::vector<int> word, int n) : word_(std::move(word)), n_(n) {
  check_word(word_, n_);
}

Braid operator*(const Braid& a, const Braid& b) {
  if (a.n() != b.n())
    throw Error("Cannot multiply braids on " + std::to_string(a.n()) +
                " and " + std::to_string(b.n()) + " strands.");
  std::vector<int> w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return Braid(std::move(w), a.n());
}

Braid inverse(const Braid& b) {
  std::vector<int> w(b.word().rbegin(), b.word().rend());
  for (int& x : w) x = -x;
  return Braid(std::move(w), b.n());
}

Braid power(const Braid& b, long k) {
  const Braid base = k < 0 ? inverse(b) : b;
  const auto reps = static_cast<std::size_t>(k < 0 ? -k : k);
  std::vector<int> w;
  w.reserve(reps * base.length());
  for (std::size_t r = 0; r < reps; ++r)
    w.insert(w.end(), base.word().begin(), base.word().end());
  return Braid(std::move(w), b.n());
}

bool lexeq(const Braid& a, const Braid& b) {
  return a.n() == b.n() && a.word() == b.word();
}

bool equals(const Braid& a, const Braid& b) {
  if (a.n() != b.n())
    throw Error("Cannot compare braids with different numbers of strands.");
  return loopcoords(a) == loopcoords(b);
}

bool istrivial(const Braid& b) {
  return loopcoords(b) == canonical_loop(b.n(), true);
}

Braid compact(const Braid& b) {
  return Braid(compact_word(b.word()), b.n());
}

std::vector<int> perm(const Braid& b) {
  std::vector<int> p(static_cast<std::size_t>(b.n()));
  std::iota(p.begin(), p.end(), 1);
  for (int w : b.word()) {
    const auto i = static_cast<std::size_t>(std::abs(w));
    std::swap(p[i - 1], p[i]);
  }
  return p;
}

bool ispure(const Braid& b) {
  const auto p = perm(b);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i) + 1) return false;
  return true;
}

long writhe(const Braid& b) {
  long w = 0;
  for (int x : b.word()) w += x > 0 ? 1 : -1;
  return w;
}

Braid subbraid(const Braid& b, std::span<const int> keep) {
  if (keep.empty()) throw Error("subbraid needs at least one strand.");
  std::vector<bool> kept(static_cast<std::size_t>(b.n()) + 1, false);
  int prev = 0;
  for (int s : keep) {
    if (s < 1 || s > b.n())
      throw Error("Strand " + std::to_string(s) + " out of range.");
    if (s <= prev)
      throw Error("subbraid strands must be strictly increasing.");
    kept[static_cast<std::size_t>(s)] = true;
    prev = s;
  }
  // at[p] is the strand currently at position p (1-based).
  std::vector<int> at(static_cast<std::size_t>(b.n()) + 1);
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> out;
  for (int w : b.word()) {
    const auto i = static_cast<std::size_t>(std::abs(w));
    if (kept[static_cast<std::size_t>(at[i])] &&
        kept[static_cast<std::size_t>(at[i + 1])]) {
      int rank = 0;
      for (std::size_t p = 1; p <= i; ++p)
        if (kept[static_cast<std::size_t>(at[p])]) ++rank;
      out.push_back(w > 0 ? rank : -rank);
    }
    std::swap(at[i], at[i + 1]);
  }
  return Braid(std::move(out), static_cast<int>(keep.size()));
}

Braid tensor(const Braid& a, const Braid& b) {
  std::vector<int> w = a.word();
  for (int x : b.word()) w.push_back(x > 0 ? x + a.n() : x - a.n());
  return Braid(std::move(w), a.n() + b.n());
}

Braid with_strands(const Braid& b, int n) {
  if (n < b.n())
    throw Error("Cannot embed a braid into fewer strands.");
  return Braid(b.word(), n);
}

Braid random_braid(int n, std::size_t length, std::uint64_t seed) {
  if (n < 2) throw Error("Random braids need at least 2 strands.");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2 * (n - 1) - 1);
  std::vector<int> w(length);
  for (auto& x : w) {
    const int r = pick(rng);
    x = r < n - 1 ? r + 1 : -(r - (n - 1) + 1);
  }
  return Braid(std::move(w), n);
}

Braid halftwist(int n) {
  if (n < 2) throw Error("HalfTwist needs at least 2 strands.");
  std::vector<int> w;
  for (int start = 1; start <= n - 1; ++start)
    for (int g = n - 1; g >= start; --g) w.push_back(g);
  return Braid(std::move(w), n);
}

Braid fulltwist(int n) { return power(halftwist(n), 2); }

namespace {

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "< e >";
  std::ostringstream os;
  os << "<";
  for (int w : word) os << ' ' << w;
  os << " >";
  return os.str();
}

}  // namespace

std::string to_string(const Braid& b) { return word_string(b.word()); }

std::ostream& operator<<(std::ostream& os, const Braid& b) {
  return os << to_string(b);
}

AnnularBraid::AnnularBraid(std::vector<int> word) : word_(std::move(word)) {
  nann_ = std::max(1, max_index(word_));
}

AnnularBraid::AnnularBraid(std::vector<int> word, int nann)
    : word_(std::move(word)), nann_(nann) {
  if (nann_ < 1) throw Error("An annular braid needs a moving puncture.");
  for (int w : word_) {
    if (w == 0) throw Error("Braid generator index cannot be zero.");
    if (std::abs(w) > nann_)
      throw Error("Annular generator index " + std::to_string(w) +
                  " exceeds the number of annular punctures.");
  }
}

Braid to_braid(const AnnularBraid& ab) {
  const int m = ab.nann();
  // Sigma_m = s_m^2 s_{m-1} ... s_1 s_2^-1 ... s_{m-1}^-1 s_m^-2.  With a
  // single moving puncture this is the full turn s_1^2 about the centre.
  std::vector<int> wrap;
  if (m == 1) {
    wrap = {1, 1};
  } else {
    wrap = {m, m};
    for (int g = m - 1; g >= 1; --g) wrap.push_back(g);
    for (int g = 2; g <= m - 1; ++g) wrap.push_back(-g);
    wrap.push_back(-m);
    wrap.push_back(-m);
  }
  std::vector<int> out;
  for (int w : ab.word()) {
    if (std::abs(w) < m) {
      out.push_back(w);
    } else if (w > 0) {
      out.insert(out.end(), wrap.begin(), wrap.end());
    } else {
      for (auto it = wrap.rbegin(); it != wrap.rend(); ++it)
        out.push_back(-*it);
    }
  }
  return Braid(std::move(out), m + 1);
}

std::string to_string(const AnnularBraid& ab) {
  return word_string(ab.word()) + "*";
}

std::vector<int> parse_word(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), '[', ' ');
  std::replace(s.begin(), s.end(), ']', ' ');
  std::istringstream in(s);
  std::vector<int> w;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("Cannot parse braid word entry '" + tok + "'.");
    }
    if (used != tok.size())
      throw Error("Cannot parse braid word entry '" + tok + "'.");
    w.push_back(v);
  }
  return w;
}

}  // namespace braidkit
