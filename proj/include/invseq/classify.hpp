#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invseq/enumerate.hpp"
#include "invseq/word.hpp"

namespace invseq {

enum class Level { wilf, strong, superstrong };

Level parse_level(std::string_view name);
std::string to_string(Level level);

struct ClassifyOptions {
  EnumerationOptions enumeration;
  int wilf_limit = 10;        // n_max ceiling for plain Wilf classes
  int superstrong_limit = 8;  // n_max ceiling for strong / super-strong classes
};

/// Patterns grouped by equality of their statistics for every 1 <= n <= n_max:
/// avoider totals (wilf), occurrence-count distributions (strong) or
/// occurrence-position distributions (superstrong).
struct EquivalencePartition {
  Level level = Level::wilf;
  int n_max = 0;
  std::vector<std::vector<Pattern>> classes;  // each sorted; classes ordered by least member
  std::vector<std::string> evidence;          // per class: FNV-1a digest of the shared statistics
  std::string evidence_digest;

  /// Class sizes, largest first.
  std::vector<int> class_sizes() const;
  nlohmann::json to_json() const;
};

EquivalencePartition classify(const std::vector<Pattern>& patterns, int n_max, Level level,
                              const ClassifyOptions& options = {});

/// Canonical statistics text for one pattern at one level (what classify compares).
std::vector<std::string> pattern_signatures(const std::vector<Pattern>& patterns, int n_max, Level level,
                                            const ClassifyOptions& options = {});

}  // namespace invseq
