#pragma once

// Brute-force enumeration of I_n. This is the oracle every other module is
// checked against, so it stays as close to the definitions as possible.

#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <vector>

#include "invseq/count_table.hpp"
#include "invseq/types.hpp"
#include "invseq/word.hpp"

namespace invseq {

struct EnumerationOptions {
  int count_limit = 12;    // largest n for avoider counting
  int profile_limit = 8;   // largest n for position-set profiles
  int threads = 1;
  int partition_depth = 4; // prefix length used to shard the search tree
};

/// Lexicographic range over I_n; `*it` is the current sequence as a Word.
class InversionSequenceRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    explicit iterator(int n) : current_(static_cast<std::size_t>(n), 0), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& other) const { return done_ && other.done_; }

   private:
    Word current_;
    bool done_ = true;
  };

  explicit InversionSequenceRange(int n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

/// Every member of I_n once, lexicographically. n! items; I_0 holds the empty word.
InversionSequenceRange generate_all(int n, const EnumerationOptions& options = {});

/// Callback form of generate_all without per-item allocation.
template <class Visitor>
void for_each_inversion_sequence(int n, Visitor&& visit) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (;;) {
    visit(std::span<const int>(e));
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == i) {
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++e[static_cast<std::size_t>(i)];
  }
}

BigInt factorial(int n);

/// |I_n(p)| by depth-first search that cuts a branch as soon as the newest r entries form p.
BigInt brute_count_avoiders(const Pattern& p, int n, const EnumerationOptions& options = {});

/// |I_{n,k}(p)|; 0 when k >= n.
BigInt brute_count_refined(const Pattern& p, int n, int k, const EnumerationOptions& options = {});

/// Full table for n <= n_max from one pruned search. Serial and parallel runs are identical.
CountTable brute_count_table(const Pattern& p, int n_max, const EnumerationOptions& options = {});

/// Distribution of occurrences of p over I_n.
struct OccurrenceProfile {
  Pattern pattern;
  int n = 0;
  std::map<int, BigInt> by_count;        // m -> #{e : |Em(p,e)| = m}
  std::map<PositionSet, BigInt> by_set;  // T -> #{e : Em(p,e) = T}

  /// Canonical text: one "T=count" per line, T in brace form.
  std::string canonical_by_set() const;
  std::string canonical_by_count() const;
};

OccurrenceProfile occurrence_profile(const Pattern& p, int n, const EnumerationOptions& options = {});

/// One pass over I_n computing profiles of several patterns at once.
std::vector<OccurrenceProfile> occurrence_profiles(const std::vector<Pattern>& patterns, int n,
                                                   const EnumerationOptions& options = {});

/// Position set as a bitmask, bit (i-1) for position i. n must be <= 64.
std::uint64_t occurrence_mask(std::span<const int> word, const Pattern& p);
PositionSet mask_to_positions(std::uint64_t mask);

}  // namespace invseq
