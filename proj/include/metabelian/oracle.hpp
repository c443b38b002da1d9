#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "metabelian/endomorphism.hpp"

namespace metabelian {

/// Result of a brute-force fixed-point search over all elements of M_n
/// with a representative word of length <= max_len.
struct SearchReport {
  int rank = 0;
  int max_len = 0;
  std::uint64_t words_enumerated = 0;
  /// Distinct nontrivial elements after deduplication by the canonical
  /// Magnus form (the identity is skipped, not counted).
  std::uint64_t distinct_elements = 0;
  /// First enumerated representative of every fixed element, in
  /// enumeration order. Empty for alpha_n: that is the point.
  std::vector<GroupWord> fixed_points_found;

  bool operator==(const SearchReport&) const = default;
};

/// Visits every freely reduced word of length <= max_len exactly once, in
/// length-lexicographic order. The letter alphabet is ordered
/// g1 < g1^-1 < g2 < g2^-1 < ...; words of equal length come in
/// lexicographic order over that alphabet. The count of words of length
/// k >= 1 is 2n * (2n-1)^(k-1).
void for_each_reduced_word(int rank, int max_len,
                           const std::function<void(const GroupWord&)>& visit);

/// Convenience eager form of the enumeration (test-sized budgets only).
std::vector<GroupWord> enumerate_reduced_words(int rank, int max_len);

/// Enumerates words up to max_len, deduplicates by the canonical Magnus
/// form, and reports every nontrivial element fixed by e (that is, with
/// apply_bar(e, m) = m).
///
/// The search partitions by first letter and may run the partitions on a
/// worker pool (workers = 0 picks the hardware concurrency); reports are
/// merged deterministically, so the result is identical for every worker
/// count and across runs.
SearchReport search_fixed_points(const IAEndomorphism& e, int max_len,
                                 int workers = 0);

}  // namespace metabelian
