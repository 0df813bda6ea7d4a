#pragma once

// Closed recurrences for |I_{n,k}(p)| over all length-3 patterns and the
// run-of-zeros family. Tables are filled bottom-up with every cell memoized,
// so they reach far past brute-force range (default ceiling n = 200).

#include <vector>

#include "invseq/count_table.hpp"
#include "invseq/types.hpp"
#include "invseq/word.hpp"

namespace invseq {

inline constexpr int kRecurrenceCeiling = 200;

/// |I_n(000)| via a(n) = (n-1) a(n-1) + (n-2) a(n-2), a(1) = 1, a(2) = 2.
BigInt rec_count_000(int n);

/// |I_n(0^r)| via a(n) = sum_{j=1}^{r-1} (n-j) a(n-j), a(n) = n! for n < r. Requires r >= 2.
BigInt rec_count_zeros(int r, int n);

/// d_0 .. d_{n_max}: d_0 = 1, d_1 = 0, d_n = (n-1)(d_{n-1} + d_{n-2}).
class DerangementTable {
 public:
  explicit DerangementTable(int n_max);
  const BigInt& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
  int n_max() const noexcept { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<BigInt> values_;
};

/// n * |I_n(000)| == (n+1)! - d_{n+1}.
bool derangement_identity_check(int n);

/// True for the 13 length-3 patterns.
bool has_length3_recurrence(const Pattern& p);

/// The 0^r pattern for r >= 1.
bool is_zero_run(const Pattern& p);

/// Full table through n_max from the pattern's own recurrence. Throws UsageError for
/// patterns without one.
CountTable rec_table_len3(const Pattern& p, int n_max);

/// Collapsed double-sum forms; same cells as rec_table_len3 for 012 and 210.
CountTable rec_table_012_fast(int n_max);
CountTable rec_table_210_fast(int n_max);

/// Totals-only table for 0^r (cells are left empty; only total(n) is meaningful).
std::vector<BigInt> rec_totals_zeros(int r, int n_max);

}  // namespace invseq
