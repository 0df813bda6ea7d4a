#include "invseq/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace invseq {

namespace {

constexpr int kMaxSearchDepth = 64;

void check_count_limit(int n, const EnumerationOptions& options) {
  if (n < 0) throw UsageError("negative sequence length");
  if (n > options.count_limit) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds enumeration limit " +
                        std::to_string(options.count_limit));
  }
}

using Tally = std::vector<std::vector<std::uint64_t>>;  // [n][k]

Tally make_tally(int n_max) {
  Tally t(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) t[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), 0);
  return t;
}

// Depth-first avoider search. Every node at depth len is an avoider of length len.
class AvoiderSearch {
 public:
  AvoiderSearch(const Pattern& p, int n_max) : p_(p), r_(p.size()), n_max_(n_max) {}

  // Explores all avoiders extending e[0..len), counting nodes of depth > len.
  void descend(int len, int stop, Tally& tally, std::vector<Word>* frontier) {
    if (len == stop) {
      if (frontier) frontier->emplace_back(e_.begin(), e_.begin() + len);
      return;
    }
    for (int v = 0; v <= len; ++v) {
      e_[static_cast<std::size_t>(len)] = v;
      if (len + 1 >= r_ &&
          p_.matches(std::span<const int>(e_.data() + (len + 1 - r_), static_cast<std::size_t>(r_)))) {
        continue;
      }
      ++tally[static_cast<std::size_t>(len) + 1][static_cast<std::size_t>(v)];
      descend(len + 1, stop, tally, frontier);
    }
  }

  void load(const Word& prefix) { std::copy(prefix.begin(), prefix.end(), e_.begin()); }
  int n_max() const { return n_max_; }

 private:
  const Pattern& p_;
  int r_;
  int n_max_;
  std::array<int, kMaxSearchDepth> e_{};
};

}  // namespace

InversionSequenceRange::iterator& InversionSequenceRange::iterator::operator++() {
  int i = static_cast<int>(current_.size()) - 1;
  while (i >= 0 && current_[static_cast<std::size_t>(i)] == i) {
    current_[static_cast<std::size_t>(i)] = 0;
    --i;
  }
  if (i < 0) {
    done_ = true;
  } else {
    ++current_[static_cast<std::size_t>(i)];
  }
  return *this;
}

InversionSequenceRange generate_all(int n, const EnumerationOptions& options) {
  check_count_limit(n, options);
  return InversionSequenceRange(n);
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

CountTable brute_count_table(const Pattern& p, int n_max, const EnumerationOptions& options) {
  check_count_limit(n_max, options);
  CountTable table(p, n_max, "brute");
  if (n_max == 0) return table;

  // Serial pass down to the partition depth, collecting the frontier of live prefixes.
  const int split = std::clamp(options.partition_depth, 0, n_max);
  Tally tally = make_tally(n_max);
  std::vector<Word> frontier;
  {
    AvoiderSearch search(p, n_max);
    search.descend(0, split, tally, &frontier);
  }

  if (split < n_max) {
    std::vector<Tally> partial(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      AvoiderSearch search(p, n_max);
      for (std::size_t i = next++; i < frontier.size(); i = next++) {
        partial[i] = make_tally(n_max);
        search.load(frontier[i]);
        search.descend(split, n_max, partial[i], nullptr);
      }
    };
    const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(frontier.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    // Merge in task order; addition is exact so the schedule cannot matter.
    for (const auto& part : partial) {
      for (int n = split + 1; n <= n_max; ++n) {
        for (int k = 0; k < n; ++k) {
          tally[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] +=
              part[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        }
      }
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInt> row(tally[static_cast<std::size_t>(n)].begin(), tally[static_cast<std::size_t>(n)].end());
    table.set_row(n, std::move(row));
  }
  return table;
}

BigInt brute_count_avoiders(const Pattern& p, int n, const EnumerationOptions& options) {
  check_count_limit(n, options);
  if (n == 0) return 1;
  return brute_count_table(p, n, options).total(n);
}

BigInt brute_count_refined(const Pattern& p, int n, int k, const EnumerationOptions& options) {
  check_count_limit(n, options);
  if (n < 1) throw UsageError("brute_count_refined: n must be >= 1");
  if (k < 0 || k >= n) return 0;
  return brute_count_table(p, n, options).cell(n, k);
}

std::uint64_t occurrence_mask(std::span<const int> word, const Pattern& p) {
  std::uint64_t mask = 0;
  const std::size_t r = static_cast<std::size_t>(p.size());
  for (std::size_t i = 0; i + r <= word.size(); ++i) {
    if (p.matches(word.subspan(i, r))) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

PositionSet mask_to_positions(std::uint64_t mask) {
  PositionSet out;
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    out.push_back(bit + 1);
    mask &= mask - 1;
  }
  return out;
}

std::vector<OccurrenceProfile> occurrence_profiles(const std::vector<Pattern>& patterns, int n,
                                                   const EnumerationOptions& options) {
  if (n < 0) throw UsageError("negative sequence length");
  if (n > options.profile_limit) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds profile limit " +
                        std::to_string(options.profile_limit));
  }
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> masks(patterns.size());
  for_each_inversion_sequence(n, [&](std::span<const int> e) {
    for (std::size_t j = 0; j < patterns.size(); ++j) ++masks[j][occurrence_mask(e, patterns[j])];
  });

  std::vector<OccurrenceProfile> out;
  out.reserve(patterns.size());
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    OccurrenceProfile prof{patterns[j], n, {}, {}};
    for (const auto& [mask, count] : masks[j]) {
      prof.by_set[mask_to_positions(mask)] += count;
      prof.by_count[std::popcount(mask)] += count;
    }
    out.push_back(std::move(prof));
  }
  return out;
}

OccurrenceProfile occurrence_profile(const Pattern& p, int n, const EnumerationOptions& options) {
  return std::move(occurrence_profiles({p}, n, options).front());
}

std::string OccurrenceProfile::canonical_by_set() const {
  std::ostringstream out;
  for (const auto& [set, count] : by_set) out << format_positions(set) << '=' << count << '\n';
  return out.str();
}

std::string OccurrenceProfile::canonical_by_count() const {
  std::ostringstream out;
  for (const auto& [m, count] : by_count) out << m << '=' << count << '\n';
  return out.str();
}

}  // namespace invseq
