#include "braidkit/wordops.hpp"

#include <cstdlib>

namespace braidkit {

std::vector<std::size_t> cancel_indices(std::span<const int> word) {
  std::vector<std::size_t> kept;
  kept.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int x = word[i];
    bool cancelled = false;
    for (std::size_t j = kept.size(); j-- > 0;) {
      const int y = word[kept[j]];
      if (y == -x) {
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
      if (!commute(x, y)) break;
    }
    if (!cancelled) kept.push_back(i);
  }
  return kept;
}

std::vector<int> cancel_word(std::span<const int> word) {
  std::vector<int> out;
  for (std::size_t i : cancel_indices(word)) out.push_back(word[i]);
  return out;
}

namespace {

// Rewrites the length-3 window at p if it is one side of a braid relation.
bool rewrite_at(std::vector<int>& w, std::size_t p) {
  if (p + 2 >= w.size()) return false;
  const int u = w[p], v = w[p + 1], z = w[p + 2];
  if (std::abs(std::abs(u) - std::abs(v)) != 1) return false;
  if (z == u && (u > 0) == (v > 0)) {
    w[p] = v;
    w[p + 1] = u;
    w[p + 2] = v;
    return true;
  }
  if (z == -u) {
    if ((u > 0) == (v > 0)) {
      w[p] = -v;
      w[p + 1] = u;
      w[p + 2] = v;
    } else {
      w[p] = v;
      w[p + 1] = -u;
      w[p + 2] = -v;
    }
    return true;
  }
  return false;
}

// True if the letter at i meets its inverse through commuting letters.
bool meets_inverse(const std::vector<int>& w, std::size_t i) {
  const int x = w[i];
  for (std::size_t j = i; j-- > 0;) {
    if (w[j] == -x) return true;
    if (!commute(x, w[j])) break;
  }
  for (std::size_t j = i + 1; j < w.size(); ++j) {
    if (w[j] == -x) return true;
    if (!commute(x, w[j])) break;
  }
  return false;
}

bool window_cancels(const std::vector<int>& w, std::size_t p) {
  for (std::size_t i = p; i < p + 3 && i < w.size(); ++i)
    if (meets_inverse(w, i)) return true;
  return false;
}

// One improving rewrite (possibly two chained), or false if none is found.
bool improve(std::vector<int>& w) {
  for (std::size_t p = 0; p + 2 < w.size(); ++p) {
    std::vector<int> w1 = w;
    if (!rewrite_at(w1, p)) continue;
    if (window_cancels(w1, p)) {
      auto r = cancel_word(w1);
      if (r.size() < w.size()) {
        w = std::move(r);
        return true;
      }
    }
    const std::size_t lo = p >= 2 ? p - 2 : 0;
    for (std::size_t q = lo; q <= p + 2 && q + 2 < w1.size(); ++q) {
      if (q == p) continue;
      std::vector<int> w2 = w1;
      if (!rewrite_at(w2, q) || !window_cancels(w2, q)) continue;
      auto r = cancel_word(w2);
      if (r.size() < w.size()) {
        w = std::move(r);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<int> compact_word(std::span<const int> word) {
  std::vector<int> w = cancel_word(word);
  while (improve(w)) {
  }
  return w;
}

}  // namespace braidkit
