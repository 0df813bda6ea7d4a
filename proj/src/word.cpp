#include "invseq/word.hpp"

#include <algorithm>
#include <charconv>

#include "invseq/types.hpp"

namespace invseq {

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

// Extends a partial classical match of p[0..depth) by choosing an index >= start.
bool extend_classical(std::span<const int> word, const Word& p, std::vector<int>& chosen,
                      std::size_t start) {
  const std::size_t depth = chosen.size();
  if (depth == p.size()) return true;
  const std::size_t remaining = p.size() - depth;
  for (std::size_t i = start; i + remaining <= word.size(); ++i) {
    bool consistent = true;
    for (std::size_t j = 0; j < depth && consistent; ++j) {
      consistent = sign(word[i] - chosen[j]) == sign(p[depth] - p[j]);
    }
    if (!consistent) continue;
    chosen.push_back(word[i]);
    if (extend_classical(word, p, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Word reduce(std::span<const int> word) {
  if (word.empty()) throw UsageError("reduce: empty word");
  Word distinct(word.begin(), word.end());
  if (*std::min_element(distinct.begin(), distinct.end()) < 0) {
    throw UsageError("reduce: negative letter");
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Word out;
  out.reserve(word.size());
  for (int x : word) {
    out.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), x) -
                                   distinct.begin()));
  }
  return out;
}

bool is_reduced(std::span<const int> word) {
  if (word.empty()) return false;
  return std::equal(word.begin(), word.end(), reduce(word).begin());
}

bool is_inversion_sequence(std::span<const int> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] > static_cast<int>(i)) return false;
  }
  return true;
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) return out;
  const bool comma_form = text.find(',') != std::string_view::npos;
  if (!comma_form) {
    for (char c : text) {
      if (c < '0' || c > '9') throw UsageError("bad word literal: " + std::string(text));
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, next - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0) {
      throw UsageError("bad word literal: " + std::string(text));
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

std::string format_word(std::span<const int> word) {
  const bool digits = std::all_of(word.begin(), word.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + word[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(word[i]);
    }
  }
  return out;
}

std::string format_positions(const PositionSet& positions) {
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(positions[i]);
  }
  out.push_back('}');
  return out;
}

InversionSequence::InversionSequence(Word entries) : entries_(std::move(entries)) {
  if (!is_inversion_sequence(entries_)) {
    throw UsageError("not an inversion sequence: " + format_word(entries_));
  }
}

InversionSequence InversionSequence::parse(std::string_view text) {
  return InversionSequence(parse_word(text));
}

InversionSequence InversionSequence::zeros(int n) {
  return InversionSequence(Word(static_cast<std::size_t>(std::max(n, 0)), 0));
}

Pattern::Pattern(Word letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw UsageError("empty pattern");
  if (!is_reduced(letters_)) {
    throw UsageError("pattern is not in reduced form: " + format_word(letters_));
  }
  max_letter_ = *std::max_element(letters_.begin(), letters_.end());
}

Pattern Pattern::parse(std::string_view text) { return Pattern(parse_word(text)); }

bool Pattern::matches(std::span<const int> window) const noexcept {
  const std::size_t r = letters_.size();
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      if (sign(window[a] - window[b]) != sign(letters_[a] - letters_[b])) return false;
    }
  }
  return true;
}

PositionSet find_occurrences(std::span<const int> word, const Pattern& p) {
  PositionSet out;
  const std::size_t r = static_cast<std::size_t>(p.size());
  for (std::size_t i = 0; i + r <= word.size(); ++i) {
    if (p.matches(word.subspan(i, r))) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

bool contains_consecutive(std::span<const int> word, const Pattern& p) {
  const std::size_t r = static_cast<std::size_t>(p.size());
  for (std::size_t i = 0; i + r <= word.size(); ++i) {
    if (p.matches(word.subspan(i, r))) return true;
  }
  return false;
}

bool contains_classical(std::span<const int> word, const Pattern& p) {
  std::vector<int> chosen;
  chosen.reserve(p.letters().size());
  return extend_classical(word, p.letters(), chosen, 0);
}

}  // namespace invseq
