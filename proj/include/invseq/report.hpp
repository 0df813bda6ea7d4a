#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "invseq/types.hpp"

namespace invseq {

/// One checked numerical claim: lhs and rhs are compared for exact equality.
struct ClaimRecord {
  std::string claim;
  int n = 0;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

ClaimRecord make_claim(std::string claim, int n, const BigInt& lhs, const BigInt& rhs);
ClaimRecord make_claim(std::string claim, int n, const std::string& lhs, const std::string& rhs);

nlohmann::json to_json(const ClaimRecord& record);
nlohmann::json to_json(const std::vector<ClaimRecord>& records);

bool all_ok(const std::vector<ClaimRecord>& records);
/// First failing record, or nullptr.
const ClaimRecord* first_failure(const std::vector<ClaimRecord>& records);

/// 64-bit FNV-1a, printed as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace invseq
