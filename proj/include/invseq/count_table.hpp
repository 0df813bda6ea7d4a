#pragma once

#include <string>
#include <vector>

#include "invseq/types.hpp"
#include "invseq/word.hpp"

namespace invseq {

/// Exact |I_{n,k}(p)| for 1 <= n <= n_max, 0 <= k < n, plus |I_n(p)|.
///
/// Out-of-range lookups follow the usual conventions: cell(n, k) is 0 when
/// n <= 0 or k is outside [0, n), and total(0) is 1.
class CountTable {
 public:
  CountTable() = default;
  CountTable(Pattern pattern, int n_max, std::string method);

  const Pattern& pattern() const noexcept { return pattern_; }
  const std::string& method() const noexcept { return method_; }
  int n_max() const noexcept { return static_cast<int>(rows_.size()) - 1; }

  BigInt cell(int n, int k) const;
  BigInt total(int n) const;
  const std::vector<BigInt>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

  /// Writes row n and recomputes total(n).
  void set_row(int n, std::vector<BigInt> values);
  /// Writes a single cell; call finish_row(n) once the row is complete.
  void set_cell(int n, int k, BigInt value);
  void finish_row(int n);

  /// Same cells and totals (pattern and method are provenance, not content).
  bool same_counts(const CountTable& other) const;

  /// "n,k,count" header then one line per cell.
  std::string to_csv() const;
  /// "n count" lines for n = 1..n_max; `offset` shifts the printed index.
  std::string to_bfile(int offset = 0) const;

 private:
  Pattern pattern_;
  std::string method_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<BigInt> totals_;
};

}  // namespace invseq
