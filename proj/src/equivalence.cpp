#include "invseq/equivalence.hpp"

#include <algorithm>
#include <map>

#include "invseq/enumerate.hpp"

namespace invseq {

namespace {

bool reductions_equal(std::span<const int> a, std::span<const int> b) {
  return reduce(a) == reduce(b);
}

// Any two occurrences of a and b sharing i >= 2 entries (b starting inside a).
bool overlap_possible(const Pattern& a, const Pattern& b) {
  const std::span<const int> pa(a.letters());
  const std::span<const int> pb(b.letters());
  const std::size_t r = pa.size();
  for (std::size_t i = 2; i < r; ++i) {
    if (reductions_equal(pb.first(i), pa.last(i))) return true;
  }
  return false;
}

void check_change_shape(const Pattern& p, const Pattern& q) {
  if (p.size() != q.size()) throw UsageError("change: patterns differ in length");
  if (p.at(1) != q.at(1) || p.at(p.size()) != q.at(q.size()) || p.max_letter() != q.max_letter()) {
    throw UsageError("change: " + p.str() + " and " + q.str() +
                     " must share first letter, last letter and maximum");
  }
}

// First 1-based index violating the changeability inequality, or 0.
int first_unchangeable_index(const Pattern& p, const Pattern& q) {
  const int r = p.size();
  for (int i = 1; i <= r; ++i) {
    int bound = p.at(1);
    for (int j = 1; j <= i; ++j) bound = std::max(bound, p.at(j));
    for (int j = i + 1; j <= r; ++j) bound = std::max(bound, p.at(j) - j + i);
    if (q.at(i) > bound) return i;
  }
  return 0;
}

struct FamilyShape {
  Family source;
  int unit;    // r + 1
  int length;  // s (r + 1)
};

FamilyShape family_shape(Family target, int r, int s) {
  if (r < 1 || s < 2) throw UsageError("family maps need r >= 1 and s >= 2");
  switch (target) {
    case Family::A2: return {Family::A1, r + 1, s * (r + 1)};
    case Family::B2:
    case Family::B3: return {Family::B1, r + 1, s * (r + 1)};
    default: throw UsageError("family map target must be A2, B2 or B3");
  }
}

// S must be sorted, inside Em(p, e), and spaced like occurrences of a family pattern.
void check_occurrence_set(const InversionSequence& e, const PositionSet& S, const Pattern& p,
                          const FamilyShape& shape, int s) {
  for (std::size_t i = 1; i < S.size(); ++i) {
    const int d = S[i] - S[i - 1];
    const bool chained = d > 0 && d % shape.unit == 0 && d / shape.unit <= s - 1;
    if (!chained && d < shape.length - 1) {
      throw UsageError("position set " + format_positions(S) + " violates the family spacing");
    }
  }
  const PositionSet em = find_occurrences(e, p);
  if (!std::includes(em.begin(), em.end(), S.begin(), S.end())) {
    throw UsageError("position set " + format_positions(S) + " is not within Em(" + p.str() + ", " + e.str() + ")");
  }
}

// 1-based accessors into a Word.
int& at(Word& w, int i) { return w[static_cast<std::size_t>(i - 1)]; }
int at(const Word& w, int i) { return w[static_cast<std::size_t>(i - 1)]; }

}  // namespace

bool is_nonoverlapping(const Pattern& p) {
  if (p.size() < 2) throw UsageError("is_nonoverlapping: pattern length must be >= 2");
  return !overlap_possible(p, p);
}

bool are_mutually_nonoverlapping(const Pattern& p, const Pattern& q) {
  if (p.size() != q.size()) throw UsageError("are_mutually_nonoverlapping: length mismatch");
  if (p.size() < 2) throw UsageError("are_mutually_nonoverlapping: pattern length must be >= 2");
  return !overlap_possible(p, q) && !overlap_possible(q, p);
}

bool changeable(const Pattern& p, const Pattern& q) {
  check_change_shape(p, q);
  return first_unchangeable_index(p, q) == 0;
}

ChangeReport is_changeable(const Pattern& p, const Pattern& q) {
  check_change_shape(p, q);
  ChangeReport report{p, q, false, false, std::nullopt, 0};
  const int t = first_unchangeable_index(p, q);
  report.changeable_forward = t == 0;
  report.changeable_backward = first_unchangeable_index(q, p) == 0;
  if (t != 0) {
    // Pad p with s zeros so it sits inside an inversion sequence, then lift every
    // letter >= q_t by s + t - q_t so the changed entry at s + t equals s + t.
    const int r = p.size();
    int s = q.at(t) - t;
    for (int j = 1; j <= r; ++j) s = std::max(s, p.at(j) - j + 1);
    const int lift = s + t - q.at(t);
    Word w(static_cast<std::size_t>(s), 0);
    for (int j = 1; j <= r; ++j) w.push_back(p.at(j) >= q.at(t) ? p.at(j) + lift : p.at(j));
    InversionSequence witness(std::move(w));
    if (apply_change(witness, s + 1, p, q).has_value()) {
      throw VerificationError("changeability witness for " + p.str() + " -> " + q.str() + " is valid",
                              witness.size());
    }
    report.witness = std::move(witness);
    report.witness_position = s + 1;
  }
  return report;
}

std::optional<InversionSequence> apply_change(const InversionSequence& e, int position, const Pattern& p,
                                              const Pattern& q) {
  check_change_shape(p, q);
  const int r = p.size();
  if (position < 1 || position + r - 1 > e.size() ||
      !p.matches(std::span<const int>(e.letters()).subspan(static_cast<std::size_t>(position - 1),
                                                           static_cast<std::size_t>(r)))) {
    throw UsageError("apply_change: no occurrence of " + p.str() + " at position " + std::to_string(position));
  }
  std::vector<int> f(static_cast<std::size_t>(p.max_letter()) + 1);
  for (int j = 1; j <= r; ++j) f[static_cast<std::size_t>(p.at(j))] = e.at(position + j - 1);
  Word out = e.letters();
  for (int j = 1; j <= r; ++j) at(out, position + j - 1) = f[static_cast<std::size_t>(q.at(j))];
  if (!is_inversion_sequence(out)) return std::nullopt;
  return InversionSequence(std::move(out));
}

InversionSequence switch_all(const InversionSequence& e, const Pattern& p, const Pattern& q) {
  check_change_shape(p, q);
  if (!is_nonoverlapping(p) || !is_nonoverlapping(q) || !are_mutually_nonoverlapping(p, q) ||
      !changeable(p, q) || !changeable(q, p)) {
    throw UsageError("switch_all: " + p.str() + " and " + q.str() +
                     " must be non-overlapping, mutually non-overlapping and interchangeable");
  }
  // Occurrences share at most an endpoint, and endpoints are never rewritten,
  // so every change can be read from e and written independently.
  Word out = e.letters();
  const auto rewrite = [&](const Pattern& from, const Pattern& to) {
    for (int i : find_occurrences(e, from)) {
      const auto changed = apply_change(e, i, from, to);
      if (!changed) throw VerificationError("switch_all: invalid change of " + from.str() + " in " + e.str(), e.size());
      for (int j = i; j < i + from.size(); ++j) at(out, j) = changed->at(j);
    }
  };
  rewrite(p, q);
  rewrite(q, p);
  return InversionSequence(std::move(out));
}

Family parse_family(std::string_view name) {
  if (name == "A1") return Family::A1;
  if (name == "A2") return Family::A2;
  if (name == "B1") return Family::B1;
  if (name == "B2") return Family::B2;
  if (name == "B3") return Family::B3;
  throw UsageError("unknown family " + std::string(name));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::B1: return "B1";
    case Family::B2: return "B2";
    case Family::B3: return "B3";
  }
  return "?";
}

Pattern build_family_pattern(Family f, int r, int s) {
  if (r < 1 || s < 2) throw UsageError("family patterns need r >= 1 and s >= 2");
  Word w;
  const auto run = [&](int letter) { w.insert(w.end(), static_cast<std::size_t>(r), letter); };
  switch (f) {
    case Family::A1:
    case Family::A2:
      run(0);
      for (int a = 1; a <= s; ++a) {
        w.push_back(a);
        if (a < s) run(f == Family::A1 ? 0 : a);
      }
      break;
    case Family::B1:
      for (int a = s; a >= 1; --a) {
        w.push_back(a);
        run(0);
      }
      break;
    case Family::B2:
      w.push_back(s);
      for (int a = s - 1; a >= 1; --a) {
        run(a);
        w.push_back(s);
      }
      run(0);
      break;
    case Family::B3:
      for (int a = s; a >= 1; --a) {
        w.push_back(a);
        run(a - 1);
      }
      break;
  }
  return Pattern(std::move(w));
}

std::vector<PositionSet> block_decompose(const PositionSet& S, int step_unit, int max_multiplier) {
  if (step_unit < 1 || max_multiplier < 1) throw UsageError("block_decompose: bad step");
  std::vector<PositionSet> blocks;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const int d = i == 0 ? 0 : S[i] - S[i - 1];
    const bool continues = i > 0 && d > 0 && d % step_unit == 0 && d / step_unit <= max_multiplier;
    if (!continues) blocks.emplace_back();
    blocks.back().push_back(S[i]);
  }
  return blocks;
}

InversionSequence phi_blocks(const InversionSequence& e, const PositionSet& S, Family target, int r, int s) {
  const FamilyShape shape = family_shape(target, r, s);
  check_occurrence_set(e, S, build_family_pattern(shape.source, r, s), shape, s);
  const int u = shape.unit;
  const Word& in = e.letters();
  Word out = in;
  if (target == Family::A2) {
    // The r zeros after letter a take the value of letter a.
    for (int x : S) {
      for (int a = 1; a <= s - 1; ++a) {
        for (int b = 0; b < r; ++b) at(out, x + a * u + b) = at(in, x + a * u - 1);
      }
    }
    return InversionSequence(std::move(out));
  }
  // B2, B3: the r zeros after each letter except the last take the next letter's value.
  for (int x : S) {
    for (int m = 0; m <= s - 2; ++m) {
      for (int b = 1; b <= r; ++b) at(out, x + m * u + b) = at(in, x + (m + 1) * u);
    }
  }
  if (target == Family::B2) {
    // Every letter after the first becomes the top letter of its block's first occurrence.
    for (const auto& block : block_decompose(S, u, s - 1)) {
      const int top = at(in, block.front());
      for (int x : block) {
        for (int m = 1; m <= s - 1; ++m) at(out, x + m * u) = top;
      }
    }
  }
  return InversionSequence(std::move(out));
}

InversionSequence psi_blocks(const InversionSequence& e, const PositionSet& S, Family target, int r, int s) {
  const FamilyShape shape = family_shape(target, r, s);
  check_occurrence_set(e, S, build_family_pattern(target, r, s), shape, s);
  const int u = shape.unit;
  const Word& in = e.letters();
  Word out = in;
  for (const auto& block : block_decompose(S, u, s - 1)) {
    if (target == Family::A2) {
      // The first occurrence of a block keeps its leading zeros.
      const int zero = at(in, block.front());
      for (int x : block) {
        for (int a = 1; a <= s - 1; ++a) {
          for (int b = 0; b < r; ++b) at(out, x + a * u + b) = zero;
        }
      }
      continue;
    }
    // The last occurrence of a block keeps its trailing zeros.
    const int zero = at(in, block.back() + (s - 1) * u + 1);
    for (int x : block) {
      if (target == Family::B2) {
        // Letter m was parked in the zero just before it.
        for (int m = 1; m <= s - 1; ++m) at(out, x + m * u) = at(in, x + m * u - 1);
      }
      for (int m = 0; m <= s - 2; ++m) {
        for (int b = 1; b <= r; ++b) at(out, x + m * u + b) = zero;
      }
    }
  }
  return InversionSequence(std::move(out));
}

std::vector<Pattern> enumerate_patterns(int r) {
  if (r < 1 || r > 6) throw UsageError("enumerate_patterns: r must be in [1, 6]");
  std::vector<Pattern> out;
  Word w(static_cast<std::size_t>(r), 0);
  for (;;) {
    if (is_reduced(w)) out.emplace_back(w);
    int i = r - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == r - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string to_string(Extension x) {
  switch (x) {
    case Extension::none: return "none";
    case Extension::left: return "left";
    case Extension::right: return "right";
    case Extension::both: return "both";
  }
  return "?";
}

namespace {
Extension combine(bool left, bool right) {
  if (left && right) return Extension::both;
  if (left) return Extension::left;
  if (right) return Extension::right;
  return Extension::none;
}
}  // namespace

Extension extends(const Pattern& p, const Pattern& q) {
  if (p.size() <= q.size()) throw UsageError("extends: first pattern must be longer");
  const std::span<const int> letters(p.letters());
  const std::size_t m = static_cast<std::size_t>(q.size());
  // Any sub-window of an occurrence reduces like the matching sub-word of p.
  const bool right = reduce(letters.first(m)) == q.letters();
  const bool left = reduce(letters.last(m)) == q.letters();
  return combine(left, right);
}

Extension extends_by_search(const Pattern& p, const Pattern& q, int n) {
  if (p.size() <= q.size()) throw UsageError("extends: first pattern must be longer");
  bool left = true;
  bool right = true;
  const std::size_t r = static_cast<std::size_t>(p.size());
  const std::size_t m = static_cast<std::size_t>(q.size());
  // Prefixes of members of I_n cover every shorter length.
  for_each_inversion_sequence(n, [&](std::span<const int> e) {
    for (int i : find_occurrences(e, p)) {
      const auto window = e.subspan(static_cast<std::size_t>(i - 1), r);
      right = right && q.matches(window.first(m));
      left = left && q.matches(window.last(m));
    }
  });
  return combine(left, right);
}

std::vector<std::pair<Pattern, Pattern>> extension_pairs() {
  const char* table[][2] = {{"0100", "0110"}, {"1002", "1102"}, {"1200", "1220"}, {"0211", "0221"},
                            {"1000", "1110"}, {"1001", "1101"}, {"1100", "1100"}, {"2100", "2210"},
                            {"2001", "2201"}, {"2110", "2110"}};
  std::vector<std::pair<Pattern, Pattern>> out;
  for (const auto& row : table) out.emplace_back(Pattern::parse(row[0]), Pattern::parse(row[1]));
  return out;
}

std::vector<std::pair<Pattern, Pattern>> extension_correspondence(int n_max) {
  auto pairs = extension_pairs();
  const Pattern p100 = Pattern::parse("100");
  const Pattern p110 = Pattern::parse("110");
  for (const auto& [from, to] : pairs) {
    if (extends(from, p100) == Extension::none || extends(to, p110) == Extension::none) {
      throw VerificationError("extension pair " + from.str() + " -> " + to.str() + " does not extend 100/110", 0);
    }
  }
  std::vector<Pattern> patterns;
  for (const auto& [from, to] : pairs) {
    patterns.push_back(from);
    patterns.push_back(to);
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto profiles = occurrence_profiles(patterns, n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (profiles[2 * i].by_set != profiles[2 * i + 1].by_set) {
        throw VerificationError("extension pair " + pairs[i].first.str() + " -> " + pairs[i].second.str() +
                                    " differs at n = " + std::to_string(n),
                                n);
      }
    }
  }
  return pairs;
}

}  // namespace invseq
