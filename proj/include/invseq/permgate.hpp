#pragma once

// Permutations, the inversion-sequence encoding theta, and vincular pattern
// matching. Used to confirm that consecutive patterns in inversion sequences
// correspond to vincular patterns in permutations.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/report.hpp"
#include "invseq/types.hpp"
#include "invseq/word.hpp"

namespace invseq {

/// An arrangement of 1..n; 1-based positions.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }
  const std::vector<int>& values() const noexcept { return values_; }
  std::string str() const { return format_word(values_); }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// e_i = #{j < i : pi_j > pi_i}.
InversionSequence theta(const Permutation& pi);
Permutation theta_inverse(const InversionSequence& e);

/// (pi^RC)_i = n + 1 - pi_{n+1-i}.
Permutation reverse_complement(const Permutation& pi);

/// Permutation pattern with adjacency bonds. Bond i ties positions i and i+1 (1-based).
class VincularPattern {
 public:
  VincularPattern(std::vector<int> word, std::set<int> bonds);

  /// Bracket notation: "3[214]" bonds 2-1-4, "[132]4" bonds 1-3-2.
  static VincularPattern parse(std::string_view text);
  /// [(r+1) r ... 1], fully bonded.
  static VincularPattern consecutive_decreasing(int length);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const noexcept { return word_; }
  const std::set<int>& bonds() const noexcept { return bonds_; }
  bool bonded(int i) const { return bonds_.contains(i); }
  std::string str() const;

 private:
  std::vector<int> word_;
  std::set<int> bonds_;
};

bool contains_vincular(const Permutation& pi, const VincularPattern& vp);
bool contains_vincular(std::span<const int> pi, const VincularPattern& vp);

/// For every pi in S_n: pi_i > pi_{i+1} iff theta(pi)_i < theta(pi)_{i+1}.
bool verify_descent_lemma(int n);

/// |S_n(vp)| by enumeration of S_n.
BigInt count_vincular_avoiders(const VincularPattern& vp, int n);

/// Numerical checks of the theta correspondences for 1 <= n <= n_max (n_max <= 8).
std::vector<ClaimRecord> verify_theta_correspondences(int n_max);

/// Per-permutation transport: pi contains [(r+1)..1] iff theta(pi) contains 01..r.
bool verify_pattern_transport(int r, int n);

}  // namespace invseq
