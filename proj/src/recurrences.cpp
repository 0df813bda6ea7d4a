#include "invseq/recurrences.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "invseq/enumerate.hpp"

namespace invseq {

namespace {

void check_n_max(int n_max) {
  if (n_max < 1) throw UsageError("recurrence: n_max must be >= 1");
  if (n_max > kRecurrenceCeiling) {
    throw ResourceError("recurrence: n_max exceeds ceiling " + std::to_string(kRecurrenceCeiling));
  }
}

// Sum of c(n, j) for lo <= j <= hi, with the table's conventions outside the row.
BigInt range_sum(const CountTable& t, int n, int lo, int hi) {
  BigInt s = 0;
  lo = std::max(lo, 0);
  hi = std::min(hi, n - 1);
  for (int j = lo; j <= hi; ++j) s += t.cell(n, j);
  return s;
}

// |I_{n,k}(p)| given that rows < n are filled. `t` is |I_{n-1}(p)|.
using CellRule = std::function<BigInt(const CountTable&, int n, int k, const BigInt& t)>;

CellRule rule_for(const std::string& p) {
  // Repeated letters.
  if (p == "000") {
    // Last two entries equal to k with e_{n-2} != k forbid appending k.
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      if (k > n - 3) return t;
      return t - (c.total(n - 3) - c.cell(n - 3, k));
    };
  }
  if (p == "001") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      return t - range_sum(c, n - 2, 0, k - 1);
    };
  }
  if (p == "010") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      return t - BigInt(std::max(n - 2 - k, 0)) * c.cell(n - 2, k);
    };
  }
  if (p == "011") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      if (k == n - 1) return t;
      return t - range_sum(c, n - 2, 0, k - 1);
    };
  }
  if (p == "100" || p == "110") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      return t - range_sum(c, n - 2, k + 1, n - 3);
    };
  }
  if (p == "101") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      return t - BigInt(k) * c.cell(n - 2, k);
    };
  }
  // Distinct letters.
  if (p == "021") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      if (k == n - 1) return t;
      return t - BigInt(n - 2 - k) * range_sum(c, n - 2, 0, k - 1);
    };
  }
  if (p == "102") {
    // Forbidden tails e_{n-1} < e_{n-2} = j < k; the weight j counts choices of e_{n-1}.
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      BigInt s = 0;
      for (int j = 1; j <= k - 1; ++j) s += BigInt(j) * c.cell(n - 2, j);
      return t - s;
    };
  }
  if (p == "120") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      BigInt s = 0;
      for (int j = k + 1; j <= n - 3; ++j) s += BigInt(n - 2 - j) * c.cell(n - 2, j);
      return t - s;
    };
  }
  if (p == "201") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      return t - BigInt(k) * range_sum(c, n - 2, k + 1, n - 3);
    };
  }
  if (p == "012") {
    // Triple sum over l, j, i >= j; the innermost tail sum is read off row n-3.
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      BigInt s = 0;
      for (int l = 1; l <= k - 1; ++l) {
        for (int j = 0; j <= l - 1; ++j) s += range_sum(c, n - 3, j, n - 4);
      }
      return t - s;
    };
  }
  if (p == "210") {
    return [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
      BigInt s = 0;
      for (int l = k + 1; l <= n - 4; ++l) {
        for (int j = l + 1; j <= n - 3; ++j) s += range_sum(c, n - 3, 0, j);
      }
      return t - s;
    };
  }
  return {};
}

// Seeds for 012; its recurrence is only stated for n >= 4.
void seed_012(CountTable& table) {
  const std::vector<std::vector<int>> seeds = {{1}, {1, 1}, {2, 2, 1}};
  for (int n = 1; n <= std::min(3, table.n_max()); ++n) {
    const auto& s = seeds[static_cast<std::size_t>(n - 1)];
    table.set_row(n, std::vector<BigInt>(s.begin(), s.end()));
  }
}

CountTable fill(const Pattern& p, int n_max, const CellRule& rule, int first_n, const std::string& method) {
  CountTable table(p, n_max, method);
  if (p.str() == "012") seed_012(table);
  for (int n = first_n; n <= n_max; ++n) {
    const BigInt prev = table.total(n - 1);
    for (int k = 0; k < n; ++k) table.set_cell(n, k, rule(table, n, k, prev));
    table.finish_row(n);
  }
  return table;
}

}  // namespace

BigInt rec_count_000(int n) {
  if (n < 1) throw UsageError("rec_count_000: n must be >= 1");
  return rec_count_zeros(3, n);
}

std::vector<BigInt> rec_totals_zeros(int r, int n_max) {
  if (r < 2) throw UsageError("zero-run recurrence needs r >= 2");
  if (n_max < 0) throw UsageError("negative n");
  std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    if (n < r) {
      a[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(n - 1)] * n;
      continue;
    }
    BigInt s = 0;
    for (int j = 1; j <= r - 1; ++j) s += BigInt(n - j) * a[static_cast<std::size_t>(n - j)];
    a[static_cast<std::size_t>(n)] = s;
  }
  return a;
}

BigInt rec_count_zeros(int r, int n) {
  if (n < 1) throw UsageError("rec_count_zeros: n must be >= 1");
  return rec_totals_zeros(r, n).back();
}

DerangementTable::DerangementTable(int n_max) {
  values_.resize(static_cast<std::size_t>(std::max(n_max, 1)) + 1);
  values_[0] = 1;
  values_[1] = 0;
  for (std::size_t n = 2; n < values_.size(); ++n) {
    values_[n] = BigInt(n - 1) * (values_[n - 1] + values_[n - 2]);
  }
}

bool derangement_identity_check(int n) {
  if (n < 1) throw UsageError("derangement_identity_check: n must be >= 1");
  const DerangementTable d(n + 1);
  return rec_count_000(n) * n == factorial(n + 1) - d[n + 1];
}

bool has_length3_recurrence(const Pattern& p) {
  return p.size() == 3 && static_cast<bool>(rule_for(p.str()));
}

bool is_zero_run(const Pattern& p) { return p.max_letter() == 0; }

CountTable rec_table_len3(const Pattern& p, int n_max) {
  check_n_max(n_max);
  const CellRule rule = p.size() == 3 ? rule_for(p.str()) : CellRule{};
  if (!rule) throw UsageError("no length-3 recurrence for pattern " + p.str());
  return fill(p, n_max, rule, p.str() == "012" ? 4 : 1, "recurrence");
}

CountTable rec_table_012_fast(int n_max) {
  check_n_max(n_max);
  const CellRule rule = [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
    // 2 * sum = sum_{i<=k-3} (i+1)(2k-2-i) c(n-3,i) + k(k-1) sum_{i=k-2}^{n-4} c(n-3,i)
    BigInt twice = 0;
    for (int i = 0; i <= k - 3; ++i) twice += BigInt(i + 1) * (2 * k - 2 - i) * c.cell(n - 3, i);
    twice += BigInt(k) * (k - 1) * range_sum(c, n - 3, k - 2, n - 4);
    return t - twice / 2;
  };
  return fill(Pattern::parse("012"), n_max, rule, 4, "fast");
}

CountTable rec_table_210_fast(int n_max) {
  check_n_max(n_max);
  const CellRule rule = [](const CountTable& c, int n, int k, const BigInt& t) -> BigInt {
    if (n <= 4 || k > n - 5) return t;
    BigInt twice = BigInt(n - k - 4) * (n - k - 3) * range_sum(c, n - 3, 0, k + 2);
    for (int i = k + 3; i <= n - 4; ++i) twice += BigInt(n - i - 2) * (n + i - 2 * k - 5) * c.cell(n - 3, i);
    return t - twice / 2;
  };
  return fill(Pattern::parse("210"), n_max, rule, 1, "fast");
}

}  // namespace invseq
