#include "invseq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "invseq/report.hpp"

namespace invseq {

Level parse_level(std::string_view name) {
  if (name == "wilf") return Level::wilf;
  if (name == "strong") return Level::strong;
  if (name == "superstrong") return Level::superstrong;
  throw UsageError("unknown level " + std::string(name));
}

std::string to_string(Level level) {
  switch (level) {
    case Level::wilf: return "wilf";
    case Level::strong: return "strong";
    case Level::superstrong: return "superstrong";
  }
  return "?";
}

std::vector<std::string> pattern_signatures(const std::vector<Pattern>& patterns, int n_max, Level level,
                                            const ClassifyOptions& options) {
  if (n_max < 1) throw UsageError("classify: n_max must be >= 1");
  std::vector<std::ostringstream> sig(patterns.size());

  if (level == Level::wilf) {
    if (n_max > options.wilf_limit) {
      throw ResourceError("classify: wilf n_max exceeds limit " + std::to_string(options.wilf_limit));
    }
    EnumerationOptions inner = options.enumeration;
    inner.threads = 1;
    inner.count_limit = std::max(inner.count_limit, n_max);
    std::vector<CountTable> tables(patterns.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < patterns.size(); i = next++) {
        tables[i] = brute_count_table(patterns[i], n_max, inner);
      }
    };
    const int threads = std::max(1, std::min<int>(options.enumeration.threads, static_cast<int>(patterns.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      for (int n = 1; n <= n_max; ++n) sig[i] << n << ':' << tables[i].total(n) << '\n';
    }
  } else {
    if (n_max > options.superstrong_limit) {
      throw ResourceError("classify: " + to_string(level) + " n_max exceeds limit " +
                          std::to_string(options.superstrong_limit));
    }
    EnumerationOptions inner = options.enumeration;
    inner.profile_limit = std::max(inner.profile_limit, n_max);
    for (int n = 1; n <= n_max; ++n) {
      const auto profiles = occurrence_profiles(patterns, n, inner);
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        sig[i] << "n=" << n << '\n'
               << (level == Level::strong ? profiles[i].canonical_by_count() : profiles[i].canonical_by_set());
      }
    }
  }

  std::vector<std::string> out;
  out.reserve(sig.size());
  for (auto& s : sig) out.push_back(s.str());
  return out;
}

EquivalencePartition classify(const std::vector<Pattern>& patterns, int n_max, Level level,
                              const ClassifyOptions& options) {
  for (const auto& p : patterns) {
    if (p.size() != patterns.front().size()) throw UsageError("classify: patterns of mixed lengths");
  }
  EquivalencePartition part;
  part.level = level;
  part.n_max = n_max;

  std::vector<Pattern> unique = patterns;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  const auto sigs = pattern_signatures(unique, n_max, level, options);
  std::map<std::string, std::vector<Pattern>> groups;
  for (std::size_t i = 0; i < unique.size(); ++i) groups[sigs[i]].push_back(unique[i]);

  std::vector<std::pair<std::vector<Pattern>, std::string>> classes;
  for (auto& [sig, members] : groups) classes.emplace_back(std::move(members), fnv1a_hex(sig));
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });

  std::string all = to_string(level) + ":" + std::to_string(n_max);
  for (auto& [members, digest] : classes) {
    all += ":" + digest;
    part.classes.push_back(std::move(members));
    part.evidence.push_back(std::move(digest));
  }
  part.evidence_digest = fnv1a_hex(all);
  return part;
}

std::vector<int> EquivalencePartition::class_sizes() const {
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

nlohmann::json EquivalencePartition::to_json() const {
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& p : c) members.push_back(p.str());
    cls.push_back(std::move(members));
  }
  return {{"level", to_string(level)},
          {"n_max", n_max},
          {"class_count", classes.size()},
          {"classes", std::move(cls)},
          {"class_digests", evidence},
          {"evidence_digest", evidence_digest}};
}

}  // namespace invseq
