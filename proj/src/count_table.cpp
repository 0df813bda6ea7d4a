#include "invseq/count_table.hpp"

#include <sstream>

namespace invseq {

CountTable::CountTable(Pattern pattern, int n_max, std::string method)
    : pattern_(std::move(pattern)), method_(std::move(method)) {
  if (n_max < 0) throw UsageError("CountTable: negative n_max");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  totals_.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  totals_[0] = 1;
  for (int n = 1; n <= n_max; ++n) rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), BigInt(0));
}

BigInt CountTable::cell(int n, int k) const {
  if (n <= 0 || n > n_max() || k < 0 || k >= n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt CountTable::total(int n) const {
  if (n < 0) return 0;
  return totals_.at(static_cast<std::size_t>(n));
}

void CountTable::set_row(int n, std::vector<BigInt> values) {
  if (n <= 0 || n > n_max() || static_cast<int>(values.size()) != n) {
    throw UsageError("CountTable::set_row: bad row shape");
  }
  rows_[static_cast<std::size_t>(n)] = std::move(values);
  finish_row(n);
}

void CountTable::set_cell(int n, int k, BigInt value) {
  if (n <= 0 || n > n_max() || k < 0 || k >= n) throw UsageError("CountTable::set_cell: out of range");
  rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(value);
}

void CountTable::finish_row(int n) {
  BigInt sum = 0;
  for (const auto& v : rows_.at(static_cast<std::size_t>(n))) sum += v;
  totals_[static_cast<std::size_t>(n)] = sum;
}

bool CountTable::same_counts(const CountTable& other) const {
  return rows_ == other.rows_ && totals_ == other.totals_;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "n,k,count\n";
  for (int n = 1; n <= n_max(); ++n) {
    for (int k = 0; k < n; ++k) out << n << ',' << k << ',' << cell(n, k) << '\n';
  }
  return out.str();
}

std::string CountTable::to_bfile(int offset) const {
  std::ostringstream out;
  for (int n = 1; n <= n_max(); ++n) out << (n + offset) << ' ' << total(n) << '\n';
  return out.str();
}

}  // namespace invseq
