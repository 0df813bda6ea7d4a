#pragma once

// Overlap analysis, changeability, and the occurrence-switching bijections
// behind the generalized Wilf equivalences.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invseq/types.hpp"
#include "invseq/word.hpp"

namespace invseq {

/// No two occurrences of p can share more than one entry.
bool is_nonoverlapping(const Pattern& p);

/// No occurrence of p and occurrence of q can share more than one entry.
/// Throws UsageError on a length mismatch.
bool are_mutually_nonoverlapping(const Pattern& p, const Pattern& q);

struct ChangeReport {
  Pattern source;
  Pattern target;
  bool changeable_forward = false;
  bool changeable_backward = false;
  /// Set when !changeable_forward: a sequence whose occurrence of `source`
  /// at `witness_position` cannot be validly changed into `target`.
  std::optional<InversionSequence> witness;
  int witness_position = 0;
};

/// Letter-level criterion: q_i <= max({p_j : j <= i} U {p_j - j + i : j > i}) for all i.
/// p and q must share first letter, last letter, and maximum (UsageError otherwise).
bool changeable(const Pattern& p, const Pattern& q);

/// Both directions plus the explicit counterexample when the forward direction fails.
ChangeReport is_changeable(const Pattern& p, const Pattern& q);

/// Rewrites the occurrence of p at `position` into q through the order-preserving
/// letter map. nullopt when the result is not an inversion sequence.
std::optional<InversionSequence> apply_change(const InversionSequence& e, int position, const Pattern& p,
                                              const Pattern& q);

/// Swaps every occurrence of p with q and vice versa. Requires both non-overlapping,
/// mutually non-overlapping and interchangeable. The map is an involution on I_n.
InversionSequence switch_all(const InversionSequence& e, const Pattern& p, const Pattern& q);

// ---------------------------------------------------------------------------
// Block maps for the families
//   A1 = 0^r 1 0^r 2 ... (s-1) 0^r s       A2 = 0^r 1 1^r 2 ... (s-1)(s-1)^r s
//   B1 = s 0^r (s-1) 0^r ... 1 0^r         B2 = s (s-1)^r s (s-2)^r ... s 0^r
//                                          B3 = s (s-1)^r (s-1) (s-2)^r ... 1 0^r
// Occurrences of the source pattern may overlap when their starts differ by
// a(r+1) with 1 <= a <= s-1; such chains are the blocks of S.

enum class Family { A1, A2, B1, B2, B3 };

Family parse_family(std::string_view name);
std::string to_string(Family f);

Pattern build_family_pattern(Family f, int r, int s);

/// Maximal runs of S whose consecutive differences are a * step_unit, 1 <= a <= max_multiplier.
std::vector<PositionSet> block_decompose(const PositionSet& S, int step_unit, int max_multiplier);

/// Family map Phi_S from the source family (A1 for A2, B1 for B2/B3) to `target`.
/// Requires S to be a set of occurrences of the source pattern in e.
InversionSequence phi_blocks(const InversionSequence& e, const PositionSet& S, Family target, int r, int s);

/// Inverse map Psi_S. Requires S to be a set of occurrences of `target` in e.
InversionSequence psi_blocks(const InversionSequence& e, const PositionSet& S, Family target, int r, int s);

// ---------------------------------------------------------------------------

/// Every reduced word of length r in lexicographic order (1 <= r <= 6).
std::vector<Pattern> enumerate_patterns(int r);

enum class Extension { none, left, right, both };
std::string to_string(Extension x);

/// Right: the leftmost |q| entries of every occurrence of p form an occurrence of q.
/// Left: same with the rightmost entries. Requires |p| > |q|.
Extension extends(const Pattern& p, const Pattern& q);

/// Exhaustive confirmation of `extends` over I_m, m <= n: every occurrence transports.
Extension extends_by_search(const Pattern& p, const Pattern& q, int n);

/// The fixed bijection from length-4 patterns extending 100 to those extending 110.
std::vector<std::pair<Pattern, Pattern>> extension_pairs();

/// extension_pairs(), each pair confirmed super-strongly equivalent for n <= n_max and
/// each side confirmed to extend 100 / 110. Throws VerificationError on a mismatch.
std::vector<std::pair<Pattern, Pattern>> extension_correspondence(int n_max = 8);

}  // namespace invseq
