#pragma once

// Named verification suites driven by `invseq verify <suite>`.

#include <string>
#include <string_view>
#include <vector>

#include "invseq/report.hpp"
#include "invseq/word.hpp"

namespace invseq {

struct SuiteOptions {
  int threads = 1;
};

const std::vector<std::string>& suite_names();

/// Runs one suite; throws UsageError for an unknown name.
std::vector<ClaimRecord> run_suite(std::string_view name, const SuiteOptions& options = {});

/// Published |I_n(p)| for n = 1..8 and the 13 length-3 patterns.
struct PublishedRow {
  const char* pattern;
  unsigned long values[8];
};
const std::vector<PublishedRow>& published_length3_rows();

/// The 14 multi-pattern classes among length-4 patterns.
const std::vector<std::vector<std::string>>& published_length4_groups();

}  // namespace invseq
