#include "invseq/permgate.hpp"

#include <algorithm>
#include <numeric>

#include "invseq/enumerate.hpp"

namespace invseq {

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

bool is_permutation_word(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

// Chooses pattern position `depth` at or after text index `start`.
bool match_from(std::span<const int> pi, const VincularPattern& vp, std::vector<int>& idx, int depth,
                int start) {
  const int s = vp.size();
  if (depth == s) return true;
  const int n = static_cast<int>(pi.size());
  const bool forced = depth > 0 && vp.bonded(depth);
  const int lo = forced ? idx[static_cast<std::size_t>(depth - 1)] + 1 : start;
  const int hi = forced ? lo : n - (s - depth);
  const auto& w = vp.word();
  for (int i = lo; i <= hi && i < n; ++i) {
    bool consistent = true;
    for (int j = 0; j < depth && consistent; ++j) {
      consistent = sign(pi[static_cast<std::size_t>(i)] - pi[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]) ==
                   sign(w[static_cast<std::size_t>(depth)] - w[static_cast<std::size_t>(j)]);
    }
    if (!consistent) continue;
    idx[static_cast<std::size_t>(depth)] = i;
    if (match_from(pi, vp, idx, depth + 1, i + 1)) return true;
  }
  return false;
}

template <class Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  do {
    visit(std::span<const int>(pi));
  } while (std::next_permutation(pi.begin(), pi.end()));
}

Word theta_word(std::span<const int> pi) {
  Word e(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) e[i] += pi[j] > pi[i];
  }
  return e;
}

Pattern increasing_pattern(int length) {
  Word w(static_cast<std::size_t>(length));
  std::iota(w.begin(), w.end(), 0);
  return Pattern(w);
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_permutation_word(values_)) throw UsageError("not a permutation: " + format_word(values_));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_word(text)); }

InversionSequence theta(const Permutation& pi) { return InversionSequence(theta_word(pi.values())); }

Permutation theta_inverse(const InversionSequence& e) {
  const int n = e.size();
  std::vector<int> available(static_cast<std::size_t>(n));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> pi(static_cast<std::size_t>(n));
  // Values at positions 1..i are exactly those still available; pi_i has e_i larger ones.
  for (int i = n; i >= 1; --i) {
    const auto pick = available.end() - 1 - e.at(i);
    pi[static_cast<std::size_t>(i - 1)] = *pick;
    available.erase(pick);
  }
  return Permutation(std::move(pi));
}

Permutation reverse_complement(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - pi.at(n + 1 - i);
  return Permutation(std::move(out));
}

VincularPattern::VincularPattern(std::vector<int> word, std::set<int> bonds)
    : word_(std::move(word)), bonds_(std::move(bonds)) {
  if (word_.empty() || !is_permutation_word(word_)) throw UsageError("vincular pattern word must be a permutation");
  for (int b : bonds_) {
    if (b < 1 || b >= size()) throw UsageError("vincular bond out of range");
  }
}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<int> word;
  std::set<int> bonds;
  bool open = false;
  int group_start = 0;
  for (char c : text) {
    if (c == '[') {
      if (open) throw UsageError("nested '[' in vincular pattern");
      open = true;
      group_start = static_cast<int>(word.size()) + 1;
    } else if (c == ']') {
      if (!open) throw UsageError("unmatched ']' in vincular pattern");
      open = false;
      for (int i = group_start; i < static_cast<int>(word.size()); ++i) bonds.insert(i);
    } else if (c >= '1' && c <= '9') {
      word.push_back(c - '0');
    } else {
      throw UsageError("bad vincular pattern: " + std::string(text));
    }
  }
  if (open) throw UsageError("unterminated '[' in vincular pattern");
  return VincularPattern(std::move(word), std::move(bonds));
}

VincularPattern VincularPattern::consecutive_decreasing(int length) {
  std::vector<int> w(static_cast<std::size_t>(length));
  std::iota(w.rbegin(), w.rend(), 1);
  std::set<int> bonds;
  for (int i = 1; i < length; ++i) bonds.insert(i);
  return VincularPattern(std::move(w), std::move(bonds));
}

std::string VincularPattern::str() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    const bool bonded_left = bonded(i - 1) && i > 1;
    const bool bonded_right = bonded(i);
    if (bonded_right && !bonded_left) out.push_back('[');
    out.push_back(static_cast<char>('0' + word_[static_cast<std::size_t>(i - 1)]));
    if (bonded_left && !bonded_right) out.push_back(']');
  }
  return out;
}

bool contains_vincular(std::span<const int> pi, const VincularPattern& vp) {
  if (vp.size() > static_cast<int>(pi.size())) return false;
  std::vector<int> idx(static_cast<std::size_t>(vp.size()));
  return match_from(pi, vp, idx, 0, 0);
}

bool contains_vincular(const Permutation& pi, const VincularPattern& vp) {
  return contains_vincular(std::span<const int>(pi.values()), vp);
}

bool verify_descent_lemma(int n) {
  if (n < 0 || n > 10) throw UsageError("verify_descent_lemma: n out of range");
  bool ok = true;
  for_each_permutation(n, [&](std::span<const int> pi) {
    const Word e = theta_word(pi);
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
      if ((pi[i] > pi[i + 1]) != (e[i] < e[i + 1])) ok = false;
    }
  });
  return ok;
}

BigInt count_vincular_avoiders(const VincularPattern& vp, int n) {
  if (n < 0 || n > 10) throw ResourceError("count_vincular_avoiders: n out of range");
  std::uint64_t count = 0;
  for_each_permutation(n, [&](std::span<const int> pi) { count += !contains_vincular(pi, vp); });
  return count;
}

bool verify_pattern_transport(int r, int n) {
  if (n < 0 || n > 10) throw UsageError("verify_pattern_transport: n out of range");
  const VincularPattern vp = VincularPattern::consecutive_decreasing(r + 1);
  const Pattern p = increasing_pattern(r + 1);
  bool ok = true;
  for_each_permutation(n, [&](std::span<const int> pi) {
    if (contains_vincular(pi, vp) != contains_consecutive(theta_word(pi), p)) ok = false;
  });
  return ok;
}

std::vector<ClaimRecord> verify_theta_correspondences(int n_max) {
  if (n_max < 1 || n_max > 8) throw UsageError("verify_theta_correspondences: n_max must be in [1, 8]");
  const std::vector<VincularPattern> vps = {
      VincularPattern::parse("[321]"),  VincularPattern::parse("[4321]"), VincularPattern::parse("[54321]"),
      VincularPattern::parse("3[214]"), VincularPattern::parse("[143]2"), VincularPattern::parse("2[413]"),
      VincularPattern::parse("[241]3"), VincularPattern::parse("[231]4"), VincularPattern::parse("[132]4")};
  const auto I = [](const char* p, int n) { return brute_count_avoiders(Pattern::parse(p), n); };

  std::vector<ClaimRecord> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> avoid(vps.size(), 0);
    for_each_permutation(n, [&](std::span<const int> pi) {
      for (std::size_t j = 0; j < vps.size(); ++j) avoid[j] += !contains_vincular(pi, vps[j]);
    });
    const auto S = [&](std::size_t j) { return BigInt(avoid[j]); };
    out.push_back(make_claim("|I_n(012)| = |S_n([321])|", n, I("012", n), S(0)));
    out.push_back(make_claim("|I_n(0123)| = |S_n([4321])|", n, I("0123", n), S(1)));
    out.push_back(make_claim("|I_n(01234)| = |S_n([54321])|", n, I("01234", n), S(2)));
    out.push_back(make_claim("|I_n(120)| = |S_n(3[214])|", n, I("120", n), S(3)));
    out.push_back(make_claim("|S_n(3[214])| = |S_n([143]2)|", n, S(3), S(4)));
    out.push_back(make_claim("|I_n(021)| = |S_n(2[413])|", n, I("021", n), S(5)));
    out.push_back(make_claim("|S_n(2[413])| = |S_n([241]3)|", n, S(5), S(6)));
    out.push_back(make_claim("|S_n([241]3)| = |S_n([231]4)|", n, S(6), S(7)));
    out.push_back(make_claim("|S_n([231]4)| = |S_n([132]4)|", n, S(7), S(8)));
  }
  return out;
}

}  // namespace invseq
