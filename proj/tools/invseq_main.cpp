// invseq: count, tabulate and classify inversion sequences avoiding
// consecutive patterns.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invseq/classify.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/equivalence.hpp"
#include "invseq/recurrences.hpp"
#include "invseq/report.hpp"
#include "invseq/suites.hpp"

namespace {

using namespace invseq;
using nlohmann::json;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxPatternLength = 6;

struct Globals {
  int threads = 1;
  std::optional<int> limit;
  std::optional<int> profile_limit;
  bool timestamp = false;

  EnumerationOptions enumeration() const {
    EnumerationOptions e;
    e.threads = threads;
    if (limit) e.count_limit = *limit;
    if (profile_limit) e.profile_limit = *profile_limit;
    return e;
  }
};

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_json(json j, const Globals& g) {
  if (g.timestamp) j["generated_at"] = now_utc();
  std::cout << j.dump(2) << '\n';
}

void print_text_header(const Globals& g) {
  if (g.timestamp) std::cout << "# generated " << now_utc() << '\n';
}

Pattern read_pattern(const std::string& text) {
  Pattern p = Pattern::parse(text);
  if (p.size() > kMaxPatternLength) {
    throw UsageError("patterns longer than " + std::to_string(kMaxPatternLength) + " are not supported");
  }
  return p;
}

bool is_fast_pattern(const Pattern& p) { return p.str() == "012" || p.str() == "210"; }

void check_method(const Pattern& p, const std::string& method) {
  if (method == "recurrence" && !has_length3_recurrence(p) && !is_zero_run(p)) {
    throw UsageError("--method recurrence needs a length-3 pattern or 0^r, got " + p.str());
  }
  if (method == "recurrence" && is_zero_run(p) && p.size() < 2) {
    throw UsageError("--method recurrence needs r >= 2 for 0^r");
  }
  if (method == "fast" && !is_fast_pattern(p)) {
    throw UsageError("--method fast is only available for 012 and 210");
  }
}

/// Refined table from a recurrence; nullopt for 0^r with r != 3 (totals only).
std::optional<CountTable> recurrence_table(const Pattern& p, int n_max, const std::string& method) {
  if (method == "fast") return p.str() == "012" ? rec_table_012_fast(n_max) : rec_table_210_fast(n_max);
  if (has_length3_recurrence(p)) return rec_table_len3(p, n_max);
  return std::nullopt;
}

/// |I_n(p)| for n = 1..n_max by the chosen method.
std::vector<BigInt> totals_by(const Pattern& p, int n_max, const std::string& method, const Globals& g) {
  std::vector<BigInt> out;
  if (method == "brute") {
    const CountTable t = brute_count_table(p, n_max, g.enumeration());
    for (int n = 1; n <= n_max; ++n) out.push_back(t.total(n));
  } else if (auto t = recurrence_table(p, n_max, method)) {
    for (int n = 1; n <= n_max; ++n) out.push_back(t->total(n));
  } else {
    const auto z = rec_totals_zeros(p.size(), n_max);
    out.assign(z.begin() + 1, z.end());
  }
  return out;
}

BigInt count_by(const Pattern& p, int n, std::optional<int> refine, const std::string& method, const Globals& g) {
  if (!refine) return totals_by(p, n, method, g).back();
  if (method == "brute") return brute_count_refined(p, n, *refine, g.enumeration());
  auto t = recurrence_table(p, n, method);
  if (!t) throw UsageError("refined recurrence counts for 0^r are only available for r = 3");
  return t->cell(n, *refine);
}

/// The method --check compares against.
std::string check_partner(const Pattern& p, const std::string& method) {
  if (method != "brute") return "brute";
  if (has_length3_recurrence(p) || (is_zero_run(p) && p.size() >= 2)) return "recurrence";
  throw UsageError("--check needs a pattern with a recurrence");
}

int fail_verification(const std::string& message) {
  std::cerr << "verification failed: " << message << '\n';
  return kExitVerification;
}

struct CountArgs {
  std::string pattern;
  int n = 0;
  std::string method = "brute";
  std::optional<int> refine;
  bool check = false;
};

int cmd_count(const CountArgs& a, const Globals& g) {
  const Pattern p = read_pattern(a.pattern);
  if (a.n < 1) throw UsageError("--n must be >= 1");
  if (a.refine && (*a.refine < 0 || *a.refine >= a.n)) throw UsageError("--refine k needs 0 <= k < n");
  check_method(p, a.method);
  const BigInt value = count_by(p, a.n, a.refine, a.method, g);
  if (a.check) {
    const std::string other = check_partner(p, a.method);
    const BigInt expected = count_by(p, a.n, a.refine, other, g);
    if (value != expected) {
      return fail_verification(a.method + " gives " + value.str() + ", " + other + " gives " + expected.str() +
                               " for n = " + std::to_string(a.n));
    }
  }
  print_text_header(g);
  std::cout << value << '\n';
  return 0;
}

struct SequenceArgs {
  std::string pattern;
  int n_max = 0;
  std::string method = "brute";
  std::string format = "text";
  int offset = 1;
};

int cmd_sequence(const SequenceArgs& a, const Globals& g) {
  const Pattern p = read_pattern(a.pattern);
  if (a.n_max < 1) throw UsageError("--n-max must be >= 1");
  check_method(p, a.method);

  if (a.format == "csv") {
    std::optional<CountTable> table;
    if (a.method == "brute") {
      table = brute_count_table(p, a.n_max, g.enumeration());
    } else {
      table = recurrence_table(p, a.n_max, a.method);
    }
    if (!table) throw UsageError("csv output needs refined counts, unavailable for 0^r with r != 3");
    print_text_header(g);
    std::cout << table->to_csv();
    return 0;
  }

  const std::vector<BigInt> values = totals_by(p, a.n_max, a.method, g);
  if (a.format == "json") {
    json vals = json::array();
    for (const auto& v : values) vals.push_back(v.str());
    print_json({{"pattern", p.str()}, {"method", a.method}, {"offset", a.offset}, {"values", vals}}, g);
  } else if (a.format == "bfile") {
    print_text_header(g);
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << static_cast<int>(i) + a.offset << ' ' << values[i] << '\n';
    }
  } else {
    print_text_header(g);
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
    std::cout << '\n';
  }
  return 0;
}

struct ClassifyArgs {
  std::optional<int> length;
  std::vector<std::string> patterns;
  int n_max = 0;
  std::string level = "wilf";
};

int cmd_classify(const ClassifyArgs& a, const Globals& g) {
  std::vector<Pattern> patterns;
  if (a.length) {
    if (*a.length < 1 || *a.length > kMaxPatternLength) throw UsageError("--length must be in 1..6");
    patterns = enumerate_patterns(*a.length);
  } else {
    for (const auto& s : a.patterns) patterns.push_back(read_pattern(s));
  }
  if (patterns.empty()) throw UsageError("classify needs --length or --patterns");
  ClassifyOptions opt;
  opt.enumeration = g.enumeration();
  if (g.limit) opt.wilf_limit = *g.limit;
  if (g.profile_limit) opt.superstrong_limit = *g.profile_limit;
  print_json(classify(patterns, a.n_max, parse_level(a.level), opt).to_json(), g);
  return 0;
}

int cmd_verify(const std::string& suite, const Globals& g) {
  SuiteOptions opt;
  opt.threads = g.threads;
  const auto claims = run_suite(suite, opt);
  const bool ok = all_ok(claims);
  print_json({{"suite", suite}, {"passed", ok}, {"claim_count", claims.size()}, {"claims", to_json(claims)}}, g);
  if (const ClaimRecord* bad = first_failure(claims)) {
    return fail_verification(bad->claim + " at n = " + std::to_string(bad->n) + ": " + bad->lhs + " != " + bad->rhs);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inversion sequences avoiding consecutive patterns"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.set_version_flag("--version", "invseq 1.0.0");

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));
  app.add_option("--limit", g.limit, "Largest n for exhaustive counting")->check(CLI::Range(1, 14));
  app.add_option("--profile-limit", g.profile_limit, "Largest n for occurrence profiles")->check(CLI::Range(1, 10));
  app.add_flag("--timestamp", g.timestamp, "Stamp output with the generation time");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count |I_n(p)| or |I_{n,k}(p)|");
  c->add_option("--pattern", count.pattern, "Consecutive pattern, e.g. 012")->required();
  c->add_option("--n", count.n, "Sequence length")->required();
  c->add_option("--method", count.method)->check(CLI::IsMember({"brute", "recurrence", "fast"}))->capture_default_str();
  c->add_option("--refine", count.refine, "Restrict to sequences ending in k");
  c->add_flag("--check", count.check, "Cross-check against a second method");

  SequenceArgs seq;
  auto* s = app.add_subcommand("sequence", "Print |I_n(p)| for n = 1..n_max");
  s->add_option("--pattern", seq.pattern)->required();
  s->add_option("--n-max", seq.n_max)->required();
  s->add_option("--method", seq.method)->check(CLI::IsMember({"brute", "recurrence", "fast"}))->capture_default_str();
  s->add_option("--format", seq.format)->check(CLI::IsMember({"text", "csv", "json", "bfile"}))->capture_default_str();
  s->add_option("--offset", seq.offset, "Index printed for n = 1")->capture_default_str();

  ClassifyArgs cls;
  auto* k = app.add_subcommand("classify", "Partition patterns into equivalence classes");
  auto* len_opt = k->add_option("--length", cls.length, "All patterns of this length");
  auto* pat_opt = k->add_option("--patterns", cls.patterns, "Explicit pattern list");
  len_opt->excludes(pat_opt);
  k->add_option("--n-max", cls.n_max)->required();
  k->add_option("--level", cls.level)->check(CLI::IsMember({"wilf", "strong", "superstrong"}))->capture_default_str();

  std::string suite;
  auto* v = app.add_subcommand("verify", "Run a named verification suite");
  v->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return cmd_count(count, g);
    if (*s) return cmd_sequence(seq, g);
    if (*k) return cmd_classify(cls, g);
    return cmd_verify(suite, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationError& e) {
    return fail_verification(std::string(e.what()) + " (n = " + std::to_string(e.witness_n()) + ")");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
}
