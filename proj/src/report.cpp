#include "invseq/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace invseq {

ClaimRecord make_claim(std::string claim, int n, const BigInt& lhs, const BigInt& rhs) {
  return ClaimRecord{std::move(claim), n, lhs.str(), rhs.str(), lhs == rhs};
}

ClaimRecord make_claim(std::string claim, int n, const std::string& lhs, const std::string& rhs) {
  return ClaimRecord{std::move(claim), n, lhs, rhs, lhs == rhs};
}

nlohmann::json to_json(const ClaimRecord& record) {
  return {{"claim", record.claim}, {"n", record.n}, {"lhs", record.lhs}, {"rhs", record.rhs}, {"ok", record.ok}};
}

nlohmann::json to_json(const std::vector<ClaimRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

bool all_ok(const std::vector<ClaimRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const ClaimRecord& r) { return r.ok; });
}

const ClaimRecord* first_failure(const std::vector<ClaimRecord>& records) {
  for (const auto& r : records) {
    if (!r.ok) return &r;
  }
  return nullptr;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace invseq
