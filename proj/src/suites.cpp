#include "invseq/suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "invseq/classify.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/equivalence.hpp"
#include "invseq/permgate.hpp"
#include "invseq/recurrences.hpp"

namespace invseq {

namespace {

std::string row_text(const CountTable& t, int n) {
  std::string out;
  for (int k = 0; k < n; ++k) {
    if (k > 0) out += ',';
    out += t.cell(n, k).str();
  }
  return out;
}

std::string classes_text(const std::vector<std::vector<Pattern>>& classes, bool multi_only) {
  std::string out;
  for (const auto& c : classes) {
    if (multi_only && c.size() < 2) continue;
    out += '{';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + c[i].str();
    out += '}';
  }
  return out;
}

std::vector<ClaimRecord> tables3and4(const SuiteOptions& opt) {
  std::vector<ClaimRecord> out;
  EnumerationOptions e;
  e.threads = opt.threads;
  for (const auto& row : published_length3_rows()) {
    const Pattern p = Pattern::parse(row.pattern);
    const CountTable brute = brute_count_table(p, 8, e);
    const CountTable rec = rec_table_len3(p, 8);
    for (int n = 1; n <= 8; ++n) {
      const BigInt expected = row.values[n - 1];
      out.push_back(make_claim(std::string("brute |I_n(") + row.pattern + ")|", n, brute.total(n), expected));
      out.push_back(make_claim(std::string("recurrence |I_n(") + row.pattern + ")|", n, rec.total(n), expected));
    }
  }
  return out;
}

std::vector<ClaimRecord> recurrences_vs_brute(const SuiteOptions& opt) {
  std::vector<ClaimRecord> out;
  EnumerationOptions e;
  e.threads = opt.threads;
  for (const auto& row : published_length3_rows()) {
    const Pattern p = Pattern::parse(row.pattern);
    const CountTable brute = brute_count_table(p, 8, e);
    const CountTable rec = rec_table_len3(p, 8);
    for (int n = 1; n <= 8; ++n) {
      out.push_back(make_claim(std::string("row |I_{n,k}(") + row.pattern + ")| recurrence vs brute", n,
                               row_text(rec, n), row_text(brute, n)));
    }
  }
  for (int r = 2; r <= 4; ++r) {
    const Pattern zeros(Word(static_cast<std::size_t>(r), 0));
    const CountTable brute = brute_count_table(zeros, 8, e);
    const auto rec = rec_totals_zeros(r, 8);
    for (int n = 1; n <= 8; ++n) {
      out.push_back(make_claim("|I_n(0^" + std::to_string(r) + ")| recurrence vs brute", n,
                               rec[static_cast<std::size_t>(n)], brute.total(n)));
    }
  }
  const CountTable t000 = rec_table_len3(Pattern::parse("000"), 20);
  for (int n = 1; n <= 20; ++n) {
    out.push_back(make_claim("rec_count_zeros(3,n) = rec_count_000(n)", n, rec_count_zeros(3, n), rec_count_000(n)));
    out.push_back(make_claim("refined 000 table total = rec_count_000(n)", n, t000.total(n), rec_count_000(n)));
  }
  const CountTable slow012 = rec_table_len3(Pattern::parse("012"), 30);
  const CountTable fast012 = rec_table_012_fast(30);
  const CountTable slow210 = rec_table_len3(Pattern::parse("210"), 30);
  const CountTable fast210 = rec_table_210_fast(30);
  for (int n = 1; n <= 30; ++n) {
    out.push_back(make_claim("012 collapsed row = triple-sum row", n, row_text(fast012, n), row_text(slow012, n)));
    out.push_back(make_claim("210 collapsed row = triple-sum row", n, row_text(fast210, n), row_text(slow210, n)));
  }
  const CountTable t100 = rec_table_len3(Pattern::parse("100"), 20);
  const CountTable t110 = rec_table_len3(Pattern::parse("110"), 20);
  for (int n = 1; n <= 20; ++n) {
    out.push_back(make_claim("row |I_{n,k}(100)| = row |I_{n,k}(110)|", n, row_text(t100, n), row_text(t110, n)));
  }
  return out;
}

std::vector<ClaimRecord> derangement_identity(const SuiteOptions&) {
  std::vector<ClaimRecord> out;
  const DerangementTable d(21);
  for (int n = 1; n <= 20; ++n) {
    out.push_back(make_claim("n |I_n(000)| = (n+1)! - d_{n+1}", n, rec_count_000(n) * n, factorial(n + 1) - d[n + 1]));
  }
  return out;
}

std::vector<ClaimRecord> permutation_correspondences(const SuiteOptions&) {
  std::vector<ClaimRecord> out = verify_theta_correspondences(8);
  for (int n = 1; n <= 8; ++n) {
    out.push_back(make_claim("descent set of pi = ascent set of theta(pi)", n, std::to_string(verify_descent_lemma(n)),
                             "1"));
  }
  for (int r = 2; r <= 3; ++r) {
    for (int n = 1; n <= 7; ++n) {
      out.push_back(make_claim("pi contains [(r+1)..1] iff theta(pi) contains 0..r, r=" + std::to_string(r), n,
                               std::to_string(verify_pattern_transport(r, n)), "1"));
    }
  }
  return out;
}

// The 14 groups are checked super-strongly at n <= 8. Wilf counts up to n = 10
// still tie 3021 and 3201 with {3012, 3102}; they separate at n = 11, so the
// completeness check runs to n = 11.
constexpr int kLength4SeparationN = 11;

std::vector<ClaimRecord> theorem_length4(const SuiteOptions& opt) {
  std::vector<ClaimRecord> out;
  ClassifyOptions copt;
  copt.enumeration.threads = opt.threads;
  copt.enumeration.count_limit = kLength4SeparationN;
  copt.wilf_limit = kLength4SeparationN;
  const auto patterns = enumerate_patterns(4);
  out.push_back(make_claim("number of length-4 patterns", 4, BigInt(patterns.size()), BigInt(75)));

  std::vector<std::vector<Pattern>> groups;
  std::vector<Pattern> grouped;
  for (const auto& g : published_length4_groups()) {
    std::vector<Pattern> members;
    for (const auto& s : g) members.push_back(Pattern::parse(s));
    std::sort(members.begin(), members.end());
    grouped.insert(grouped.end(), members.begin(), members.end());
    groups.push_back(std::move(members));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const auto sigs = pattern_signatures(grouped, 8, Level::superstrong, copt);
  std::size_t at = 0;
  for (const auto& g : published_length4_groups()) {
    bool same = true;
    for (std::size_t i = 1; i < g.size(); ++i) same = same && sigs[at + i] == sigs[at];
    std::string name;
    for (const auto& s : g) name += (name.empty() ? "" : ",") + s;
    out.push_back(make_claim("Em-set distributions agree within {" + name + "}", 8, same ? "equal" : "differ",
                             std::string("equal")));
    at += g.size();
  }

  const int n = kLength4SeparationN;
  const auto wilf = classify(patterns, n, Level::wilf, copt);
  out.push_back(make_claim("wilf classes among length-4 patterns", n, BigInt(wilf.classes.size()), BigInt(55)));

  std::map<int, int> hist;
  for (int size : wilf.class_sizes()) ++hist[size];
  std::ostringstream sizes;
  for (auto it = hist.rbegin(); it != hist.rend(); ++it) sizes << it->first << 'x' << it->second << ' ';
  out.push_back(make_claim("class-size multiset", n, sizes.str(), std::string("4x1 3x4 2x9 1x41 ")));
  out.push_back(make_claim("multi-pattern wilf classes = the 14 published groups", n,
                           classes_text(wilf.classes, true), classes_text(groups, false)));
  return out;
}

std::vector<ClaimRecord> bijections(const SuiteOptions&) {
  std::vector<ClaimRecord> out;
  const Pattern p0021 = Pattern::parse("0021");
  const Pattern p0121 = Pattern::parse("0121");

  out.push_back(make_claim("switch_all(00032454; 0021, 0121)", 8,
                           switch_all(InversionSequence::parse("00032454"), p0021, p0121).str(),
                           std::string("00232254")));
  {
    std::uint64_t good = 0;
    std::uint64_t total = 0;
    for_each_inversion_sequence(7, [&](std::span<const int> w) {
      const InversionSequence e{Word(w.begin(), w.end())};
      const InversionSequence f = switch_all(e, p0021, p0121);
      ++total;
      good += switch_all(f, p0021, p0121) == e && find_occurrences(f, p0121) == find_occurrences(e, p0021) &&
              find_occurrences(f, p0021) == find_occurrences(e, p0121);
    });
    out.push_back(make_claim("switch_all involution exchanging Em(0021) and Em(0121) on I_7", 7, BigInt(good),
                             BigInt(total)));
  }

  out.push_back(make_claim("phi_S(0102040523262889), S={3,5,9}", 16,
                           phi_blocks(InversionSequence::parse("0102040523262889"), {3, 5, 9}, Family::A2, 1, 2).str(),
                           std::string("0102244523362889")));

  for (Family target : {Family::A2, Family::B2, Family::B3}) {
    const Family source = target == Family::A2 ? Family::A1 : Family::B1;
    const Pattern from = build_family_pattern(source, 1, 2);
    const Pattern to = build_family_pattern(target, 1, 2);
    std::uint64_t good = 0;
    std::uint64_t total = 0;
    for_each_inversion_sequence(9, [&](std::span<const int> w) {
      const auto check_all_subsets = [&](const PositionSet& em, auto&& check) {
        const std::uint64_t subsets = std::uint64_t{1} << em.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
          PositionSet S;
          for (std::size_t i = 0; i < em.size(); ++i) {
            if (mask >> i & 1) S.push_back(em[i]);
          }
          ++total;
          good += check(S);
        }
      };
      const PositionSet em_from = find_occurrences(w, from);
      const PositionSet em_to = find_occurrences(w, to);
      if (em_from.empty() && em_to.empty()) {
        total += 2;
        good += 2;
        return;
      }
      const InversionSequence e{Word(w.begin(), w.end())};
      check_all_subsets(em_from, [&](const PositionSet& S) {
        const InversionSequence img = phi_blocks(e, S, target, 1, 2);
        const PositionSet em = find_occurrences(img, to);
        return std::includes(em.begin(), em.end(), S.begin(), S.end()) && psi_blocks(img, S, target, 1, 2) == e;
      });
      check_all_subsets(em_to, [&](const PositionSet& S) {
        const InversionSequence pre = psi_blocks(e, S, target, 1, 2);
        const PositionSet em = find_occurrences(pre, from);
        return std::includes(em.begin(), em.end(), S.begin(), S.end()) && phi_blocks(pre, S, target, 1, 2) == e;
      });
    });
    out.push_back(make_claim("Phi_S / Psi_S round trip " + from.str() + " <-> " + to.str() + " on I_9", 9,
                             BigInt(good), BigInt(total)));
  }

  for (int r = 3; r <= 4; ++r) {
    std::uint64_t pairs = 0;
    std::uint64_t agree = 0;
    const auto patterns = enumerate_patterns(r);
    for (const auto& p : patterns) {
      for (const auto& q : patterns) {
        if (p == q || p.at(1) != q.at(1) || p.at(r) != q.at(r) || p.max_letter() != q.max_letter()) continue;
        bool all_valid = true;
        for_each_inversion_sequence(7, [&](std::span<const int> w) {
          if (!all_valid) return;
          for (int i : find_occurrences(w, p)) {
            if (!apply_change(InversionSequence(Word(w.begin(), w.end())), i, p, q)) {
              all_valid = false;
              return;
            }
          }
        });
        ++pairs;
        agree += all_valid == changeable(p, q);
      }
    }
    out.push_back(make_claim("changeable(p,q) iff every change is valid on I_7, length " + std::to_string(r), 7,
                             BigInt(agree), BigInt(pairs)));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tables3and4",          "recurrences-vs-brute",
                                                 "theorem-length4",      "permutation-correspondences",
                                                 "derangement-identity", "bijections"};
  return names;
}

std::vector<ClaimRecord> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "tables3and4") return tables3and4(options);
  if (name == "recurrences-vs-brute") return recurrences_vs_brute(options);
  if (name == "theorem-length4") return theorem_length4(options);
  if (name == "permutation-correspondences") return permutation_correspondences(options);
  if (name == "derangement-identity") return derangement_identity(options);
  if (name == "bijections") return bijections(options);
  throw UsageError("unknown suite " + std::string(name));
}

const std::vector<PublishedRow>& published_length3_rows() {
  static const std::vector<PublishedRow> rows = {
      {"012", {1, 2, 5, 17, 70, 349, 2017, 13358}},   {"021", {1, 2, 6, 23, 107, 585, 3671, 25986}},
      {"102", {1, 2, 6, 22, 96, 492, 2902, 19350}},   {"120", {1, 2, 6, 23, 107, 582, 3622, 25369}},
      {"201", {1, 2, 6, 24, 118, 684, 4548, 34036}},  {"210", {1, 2, 6, 24, 118, 684, 4554, 34192}},
      {"000", {1, 2, 5, 19, 91, 531, 3641, 28673}},   {"001", {1, 2, 4, 11, 42, 210, 1292, 9352}},
      {"010", {1, 2, 5, 17, 76, 417, 2701, 20199}},   {"011", {1, 2, 5, 17, 75, 407, 2621, 19524}},
      {"100", {1, 2, 6, 23, 109, 618, 4098, 31173}},  {"110", {1, 2, 6, 23, 109, 618, 4098, 31173}},
      {"101", {1, 2, 6, 23, 109, 619, 4113, 31352}},
  };
  return rows;
}

const std::vector<std::vector<std::string>>& published_length4_groups() {
  static const std::vector<std::vector<std::string>> groups = {
      {"0102", "0112"},         {"0021", "0121"},         {"1002", "1012", "1102"},
      {"0100", "0110"},         {"2013", "2103"},         {"1200", "1210", "1220"},
      {"0211", "0221"},         {"1000", "1110"},         {"1001", "1011", "1101"},
      {"2100", "2210"},         {"2001", "2011", "2101", "2201"},
      {"2012", "2102"},         {"2010", "2110", "2120"}, {"3012", "3102"},
  };
  return groups;
}

}  // namespace invseq
