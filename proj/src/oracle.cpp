#include "metabelian/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace metabelian {

namespace {

// Alphabet order g1 < g1^-1 < g2 < g2^-1 < ... used throughout.
int letter_at(int position) { return position % 2 == 0 ? position / 2 + 1 : -(position / 2 + 1); }

int letter_rank(int letter) {
  int idx = letter < 0 ? -letter : letter;
  return 2 * (idx - 1) + (letter < 0 ? 1 : 0);
}

// True when a precedes b in length-lexicographic enumeration order.
bool enumeration_less(const GroupWord& a, const GroupWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    int ra = letter_rank(la[i]);
    int rb = letter_rank(lb[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

// Depth-first walk of reduced words of exactly `len` letters with the given
// first letter, in lexicographic order, carrying the Magnus matrix along.
template <typename Visit>
void walk_exact_length(int rank, int first_letter, int len, Visit&& visit) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(len));
  std::vector<MagnusElement> stack;
  stack.reserve(static_cast<std::size_t>(len) + 1);
  stack.push_back(MagnusElement::identity(rank));

  const int alphabet = 2 * rank;
  std::function<void()> descend = [&]() {
    if (static_cast<int>(letters.size()) == len) {
      visit(letters, stack.back());
      return;
    }
    for (int pos = 0; pos < alphabet; ++pos) {
      int cand = letter_at(pos);
      if (letters.empty()) {
        if (cand != first_letter) continue;
      } else if (cand == -letters.back()) {
        continue;  // keep the word freely reduced
      }
      letters.push_back(cand);
      stack.push_back(mag_mul_letter(stack.back(), cand));
      descend();
      stack.pop_back();
      letters.pop_back();
    }
  };
  descend();
}

struct PartitionResult {
  std::uint64_t words = 0;
  std::unordered_set<std::string> seen;
  // Fixed candidates as (word, dedup key), in local enumeration order.
  std::vector<std::pair<GroupWord, std::string>> fixed;
};

PartitionResult scan_partition(const IAEndomorphism& e, int first_letter, int max_len) {
  const int rank = e.rank();
  PartitionResult result;
  for (int len = 1; len <= max_len; ++len) {
    walk_exact_length(rank, first_letter, len,
                      [&](const std::vector<int>& letters, const MagnusElement& m) {
                        ++result.words;
                        if (m.is_identity()) return;
                        std::string key = m.canonical_key();
                        if (!result.seen.insert(key).second) return;
                        if (e.apply_bar(m) == m) {
                          result.fixed.emplace_back(GroupWord(rank, letters), std::move(key));
                        }
                      });
  }
  return result;
}

}  // namespace

void for_each_reduced_word(int rank, int max_len,
                           const std::function<void(const GroupWord&)>& visit) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  visit(GroupWord(rank));
  for (int len = 1; len <= max_len; ++len) {
    for (int pos = 0; pos < 2 * rank; ++pos) {
      walk_exact_length(rank, letter_at(pos), len,
                        [&](const std::vector<int>& letters, const MagnusElement&) {
                          visit(GroupWord(rank, letters));
                        });
    }
  }
}

std::vector<GroupWord> enumerate_reduced_words(int rank, int max_len) {
  std::vector<GroupWord> words;
  for_each_reduced_word(rank, max_len, [&](const GroupWord& w) { words.push_back(w); });
  return words;
}

SearchReport search_fixed_points(const IAEndomorphism& e, int max_len, int workers) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  const int rank = e.rank();
  const int partitions = 2 * rank;
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  workers = std::min(workers, partitions);

  std::vector<PartitionResult> results(static_cast<std::size_t>(partitions));
  if (max_len > 0) {
    if (workers <= 1) {
      for (int p = 0; p < partitions; ++p) {
        results[static_cast<std::size_t>(p)] = scan_partition(e, letter_at(p), max_len);
      }
    } else {
      std::atomic<int> next{0};
      auto run = [&]() {
        for (int p = next.fetch_add(1); p < partitions; p = next.fetch_add(1)) {
          results[static_cast<std::size_t>(p)] = scan_partition(e, letter_at(p), max_len);
        }
      };
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int t = 0; t < workers; ++t) pool.emplace_back(run);
      for (std::thread& t : pool) t.join();
    }
  }

  // Deterministic merge: counters add up, dedup keys are unioned, and fixed
  // candidates are sorted into global enumeration order before removing
  // cross-partition duplicates.
  SearchReport report;
  report.rank = rank;
  report.max_len = max_len;
  report.words_enumerated = 1;  // the empty word; its image is the identity

  std::unordered_set<std::string> all_seen;
  std::vector<std::pair<GroupWord, std::string>> candidates;
  for (PartitionResult& r : results) {
    report.words_enumerated += r.words;
    all_seen.merge(r.seen);
    std::move(r.fixed.begin(), r.fixed.end(), std::back_inserter(candidates));
  }
  report.distinct_elements = all_seen.size();

  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return enumeration_less(a.first, b.first); });
  std::unordered_set<std::string> reported;
  for (auto& [word, key] : candidates) {
    if (reported.insert(key).second) report.fixed_points_found.push_back(std::move(word));
  }
  return report;
}

}  // namespace metabelian
