#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace braidkit {

/// An algebraic braid: a word in the Artin generators on n strands.
///
/// Entry i > 0 stands for sigma_i (strand i passes over strand i+1), and -i
/// for its inverse.  Words are never simplified implicitly; use compact().
class Braid {
 public:
  /// The identity on two strands.
  Braid() = default;

  /// Strand count defaults to 1 + max|w| (2 for the empty word).
  explicit Braid(std::vector<int> word);
  Braid(std::vector<int> word, int n);

  static Braid identity(int n) { return Braid({}, n); }

  const std::vector<int>& word() const { return word_; }
  int n() const { return n_; }
  std::size_t length() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

 private:
  std::vector<int> word_;
  int n_ = 2;
};

/// Concatenation.  Throws when the strand counts differ.
Braid operator*(const Braid& a, const Braid& b);
Braid inverse(const Braid& b);
Braid power(const Braid& b, long k);

/// Same strand count and identical words.
bool lexeq(const Braid& a, const Braid& b);

/// Group equality, decided by comparing loop coordinates.
bool equals(const Braid& a, const Braid& b);
bool istrivial(const Braid& b);

/// Shortens the word without changing the braid.  Heuristic: the result is
/// not guaranteed to be of minimal length.
Braid compact(const Braid& b);

/// perm[i] is the (1-based) strand that ends at position i+1.
std::vector<int> perm(const Braid& b);
bool ispure(const Braid& b);
long writhe(const Braid& b);

/// Keeps only the listed strands (1-based, strictly increasing).
Braid subbraid(const Braid& b, std::span<const int> keep);

/// Lays b to the right of a.
Braid tensor(const Braid& a, const Braid& b);

/// Re-embeds b on n >= b.n() strands; the extra strands are unbraided.
Braid with_strands(const Braid& b, int n);

Braid random_braid(int n, std::size_t length, std::uint64_t seed);
Braid halftwist(int n);
Braid fulltwist(int n);

std::string to_string(const Braid& b);
std::ostream& operator<<(std::ostream& os, const Braid& b);

/// A braid on an annulus: nann moving punctures and a fixed puncture at the
/// centre, drawn as an extra strand on the right.
class AnnularBraid {
 public:
  /// nann defaults to max|w| (1 for the empty word).
  explicit AnnularBraid(std::vector<int> word);
  AnnularBraid(std::vector<int> word, int nann);

  const std::vector<int>& word() const { return word_; }
  int nann() const { return nann_; }
  int n() const { return nann_ + 1; }

 private:
  std::vector<int> word_;
  int nann_ = 1;
};

/// Rewrites the annular generators in terms of ordinary ones on nann+1
/// strands.  The last generator wraps around the fixed puncture.
Braid to_braid(const AnnularBraid& ab);

std::string to_string(const AnnularBraid& ab);

/// Parses a whitespace- or comma-separated list of signed integers.
std::vector<int> parse_word(const std::string& text);

}  // namespace braidkit
