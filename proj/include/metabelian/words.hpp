#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metabelian {

/// Freely reduced word in the generators g_1..g_n and their inverses.
/// Letters are signed indices: +i stands for g_i, -i for g_i^-1.
/// Reduction is eager: constructors cancel adjacent inverse pairs, so
/// the stored letter sequence is always freely reduced.
class GroupWord {
 public:
  explicit GroupWord(int rank) : rank_(rank) {}
  GroupWord(int rank, std::span<const int> letters);
  GroupWord(int rank, std::initializer_list<int> letters)
      : GroupWord(rank, std::span<const int>(letters.begin(), letters.size())) {}

  static GroupWord generator(int rank, int i);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord inverse() const;
  GroupWord pow(int k) const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  static GroupWord commutator(const GroupWord& a, const GroupWord& b);

  /// Exponent-sum vector (image in the free abelian group Z^n).
  std::vector<int> abelianization() const;

  /// "g1 g2^-1 g3"; the empty word prints as "".
  std::string to_string() const;

  bool operator==(const GroupWord&) const = default;

 private:
  void push_reduced(int letter);

  int rank_ = 0;
  std::vector<int> letters_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Word grammar: tokens `gK` and `gK^-1` (K a positive integer), whitespace
/// separated; bracket form `[` word `,` word `]` for commutators, nestable,
/// with `[u,v]` expanding to u v u^-1 v^-1 before reduction. A `^-1` suffix
/// is also accepted on a bracket.
GroupWord parse_word(int rank, std::string_view text);

}  // namespace metabelian
