#include "metabelian/words.hpp"

#include <algorithm>
#include <cctype>

namespace metabelian {

GroupWord::GroupWord(int rank, std::span<const int> letters) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be at least 1");
  letters_.reserve(letters.size());
  for (int letter : letters) push_reduced(letter);
}

void GroupWord::push_reduced(int letter) {
  int idx = letter < 0 ? -letter : letter;
  if (idx < 1 || idx > rank_) {
    throw std::invalid_argument("letter index " + std::to_string(idx) +
                                " out of range 1.." + std::to_string(rank_));
  }
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

GroupWord GroupWord::generator(int rank, int i) {
  return GroupWord(rank, {i});
}

GroupWord GroupWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  GroupWord w(rank_);
  w.letters_ = std::move(inv);  // reversal of a reduced word is reduced
  return w;
}

GroupWord GroupWord::pow(int k) const {
  GroupWord base = k < 0 ? inverse() : *this;
  int reps = k < 0 ? -k : k;
  GroupWord out(rank_);
  for (int r = 0; r < reps; ++r) out = out * base;
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("word rank mismatch");
  GroupWord out = a;
  for (int letter : b.letters_) out.push_reduced(letter);
  return out;
}

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
  return a * b * a.inverse() * b.inverse();
}

std::vector<int> GroupWord::abelianization() const {
  std::vector<int> sums(static_cast<std::size_t>(rank_), 0);
  for (int letter : letters_) {
    sums[static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1)] +=
        letter < 0 ? -1 : 1;
  }
  return sums;
}

std::string GroupWord::to_string() const {
  std::string out;
  for (int letter : letters_) {
    if (!out.empty()) out += " ";
    out += "g" + std::to_string(letter < 0 ? -letter : letter);
    if (letter < 0) out += "^-1";
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(int rank, std::string_view text) : rank_(rank), text_(text) {}

  std::vector<int> parse_top() {
    std::vector<int> letters = parse_sequence();
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return letters;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Items until end of input, ',' or ']'.
  std::vector<int> parse_sequence() {
    std::vector<int> letters;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ',' || text_[pos_] == ']') return letters;
      std::vector<int> item = parse_item();
      letters.insert(letters.end(), item.begin(), item.end());
    }
  }

  std::vector<int> parse_item() {
    if (text_[pos_] == '[') return parse_commutator();
    if (text_[pos_] == 'g') return parse_letter();
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  std::vector<int> parse_letter() {
    std::size_t start = pos_;
    ++pos_;  // 'g'
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected generator index after 'g'", pos_);
    }
    long index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > rank_) break;  // avoid overflow on absurd indices
      ++pos_;
    }
    if (index < 1 || index > rank_) {
      throw ParseError("generator index out of range 1.." + std::to_string(rank_), start);
    }
    std::vector<int> letters{static_cast<int>(index)};
    if (consume_inverse_suffix()) letters[0] = -letters[0];
    return letters;
  }

  std::vector<int> parse_commutator() {
    std::size_t open = pos_;
    ++pos_;  // '['
    std::vector<int> left = parse_sequence();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ',') {
      throw ParseError("expected ',' in commutator opened", open);
    }
    ++pos_;
    std::vector<int> right = parse_sequence();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ']') {
      throw ParseError("expected ']' for commutator opened", open);
    }
    ++pos_;

    // [u,v] = u v u^-1 v^-1, expanded before reduction.
    std::vector<int> letters = left;
    letters.insert(letters.end(), right.begin(), right.end());
    for (auto it = left.rbegin(); it != left.rend(); ++it) letters.push_back(-*it);
    for (auto it = right.rbegin(); it != right.rend(); ++it) letters.push_back(-*it);
    if (consume_inverse_suffix()) {
      std::reverse(letters.begin(), letters.end());
      for (int& l : letters) l = -l;
    }
    return letters;
  }

  bool consume_inverse_suffix() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return false;
    std::size_t caret = pos_;
    ++pos_;
    if (pos_ + 1 >= text_.size() || text_[pos_] != '-' || text_[pos_ + 1] != '1') {
      throw ParseError("only the exponent ^-1 is supported", caret);
    }
    pos_ += 2;
    return true;
  }

  int rank_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord parse_word(int rank, std::string_view text) {
  if (rank < 1) throw std::invalid_argument("word rank must be at least 1");
  std::vector<int> letters = WordParser(rank, text).parse_top();
  return GroupWord(rank, letters);
}

}  // namespace metabelian
