#pragma once

// Words, inversion sequences, consecutive patterns and occurrence sets.
//
// Positions exposed through the API are 1-based. Storage is a plain
// std::vector<int>, so `letters()[i - 1]` is position i.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invseq {

using Word = std::vector<int>;

/// Sorted, duplicate-free, 1-based start positions (the set Em(p, e)).
using PositionSet = std::vector<int>;

/// Order-isomorphic relabelling: the i-th smallest distinct value becomes i-1.
/// Throws UsageError on an empty or negative word.
Word reduce(std::span<const int> word);

/// True iff `word` is already its own reduction.
bool is_reduced(std::span<const int> word);

/// True iff 0 <= word[i] < i for every 1-based position i.
bool is_inversion_sequence(std::span<const int> word);

/// Parses "0021100300" (all letters <= 9) or "0,10,2" (comma form).
Word parse_word(std::string_view text);

/// Digit form when every letter is <= 9, comma form otherwise.
std::string format_word(std::span<const int> word);

std::string format_positions(const PositionSet& positions);

class InversionSequence {
 public:
  InversionSequence() = default;
  /// Throws UsageError unless `entries` is an inversion sequence.
  explicit InversionSequence(Word entries);

  static InversionSequence parse(std::string_view text);
  /// All-zero sequence of length n.
  static InversionSequence zeros(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  /// 1-based access.
  int at(int position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }
  const Word& letters() const noexcept { return entries_; }
  std::string str() const { return format_word(entries_); }

  auto operator<=>(const InversionSequence&) const = default;

 private:
  Word entries_;
};

/// A reduced word p_1..p_r over {0, ..., r-1} with r >= 1.
class Pattern {
 public:
  Pattern() = default;
  /// Rejects empty and non-reduced words instead of silently reducing them.
  explicit Pattern(Word letters);

  static Pattern parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  int at(int position) const { return letters_.at(static_cast<std::size_t>(position - 1)); }
  int max_letter() const noexcept { return max_letter_; }
  const Word& letters() const noexcept { return letters_; }
  std::string str() const { return format_word(letters_); }

  /// True iff the window reduces to this pattern. `window.size()` must equal size().
  bool matches(std::span<const int> window) const noexcept;

  auto operator<=>(const Pattern& other) const { return letters_ <=> other.letters_; }
  bool operator==(const Pattern& other) const { return letters_ == other.letters_; }

 private:
  Word letters_;
  int max_letter_ = 0;
};

/// {i : reduce(e_i .. e_{i+r-1}) = p}; empty when r > n.
PositionSet find_occurrences(std::span<const int> word, const Pattern& p);
inline PositionSet find_occurrences(const InversionSequence& e, const Pattern& p) {
  return find_occurrences(std::span<const int>(e.letters()), p);
}

bool contains_consecutive(std::span<const int> word, const Pattern& p);

/// Some (not necessarily adjacent) subsequence of `word` reduces to `p`.
bool contains_classical(std::span<const int> word, const Pattern& p);
inline bool contains_classical(const InversionSequence& e, const Pattern& p) {
  return contains_classical(std::span<const int>(e.letters()), p);
}

}  // namespace invseq
