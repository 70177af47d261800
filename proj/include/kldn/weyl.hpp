#pragma once

// The parabolic quotient W^p of the type D_n Weyl group, modelled on
// {+,-}-sequences of length n with an even number of minuses.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kldn {

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Malformed user input. `position()` is the 0-based offset of the offending
/// character (or token) in the parsed text.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& reason, std::size_t position)
      : std::invalid_argument(reason + " (at position " + std::to_string(position) + ")"), reason_(reason),
        position_(position) {}
  const std::string& reason() const { return reason_; }
  std::size_t position() const { return position_; }

private:
  std::string reason_;
  std::size_t position_;
};

/// A coset representative: entries at positions 1..n, evenly many minuses.
class PMSequence {
public:
  explicit PMSequence(std::vector<Sign> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("PMSequence: length must be at least 1");
    if (minus_count() % 2 != 0) throw std::invalid_argument("PMSequence: odd number of minuses in " + to_string());
  }

  static PMSequence identity(int n) {
    if (n < 1) throw std::invalid_argument("PMSequence::identity: n must be at least 1");
    return PMSequence(std::vector<Sign>(static_cast<std::size_t>(n), Sign::Plus));
  }

  /// Parses "-+-+". Accepts an optional "|...]" wrapper as printed in the
  /// literature. When `n` is given the length must match.
  static PMSequence parse(std::string_view text, std::optional<int> n = std::nullopt) {
    std::size_t begin = 0, end = text.size();
    if (end > 0 && text[0] == '|') begin = 1;
    if (end > begin && text[end - 1] == ']') --end;
    std::vector<Sign> entries;
    for (std::size_t i = begin; i < end; ++i) {
      switch (text[i]) {
      case '+': entries.push_back(Sign::Plus); break;
      case '-': entries.push_back(Sign::Minus); break;
      default: throw ParseError(std::string("unexpected character '") + text[i] + "' in sign sequence", i);
      }
    }
    if (entries.empty()) throw ParseError("empty sign sequence", begin);
    if (n && static_cast<int>(entries.size()) != *n)
      throw ParseError("sign sequence has length " + std::to_string(entries.size()) + ", expected " +
                           std::to_string(*n),
                       end);
    std::size_t minuses = 0;
    for (Sign s : entries) minuses += s == Sign::Minus;
    if (minuses % 2 != 0) throw ParseError("sign sequence has an odd number of minuses", begin);
    return PMSequence(std::move(entries));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  /// 1-based access.
  Sign at(int position) const {
    if (position < 1 || position > size()) throw std::out_of_range("PMSequence::at");
    return entries_[static_cast<std::size_t>(position - 1)];
  }
  const std::vector<Sign>& entries() const { return entries_; }

  int minus_count() const {
    int c = 0;
    for (Sign s : entries_) c += s == Sign::Minus;
    return c;
  }
  bool is_identity() const { return minus_count() == 0; }

  std::string to_string() const {
    std::string s;
    for (Sign x : entries_) s.push_back(sign_char(x));
    return s;
  }

  friend auto operator<=>(const PMSequence&, const PMSequence&) = default;
  friend bool operator==(const PMSequence&, const PMSequence&) = default;

private:
  std::vector<Sign> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const PMSequence& w) { return os << '|' << w.to_string() << ']'; }

/// Index of a simple reflection s_i, 0 <= i <= n-1.
struct GeneratorIndex {
  int value;
  constexpr explicit GeneratorIndex(int i) : value(i) {}
  void check(int n) const {
    if (value < 0 || value > n - 1)
      throw std::out_of_range("generator index " + std::to_string(value) + " out of range for n = " +
                              std::to_string(n));
  }
  friend auto operator<=>(const GeneratorIndex&, const GeneratorIndex&) = default;
};

/// Whether generators i and j are joined in the D_n Dynkin diagram
/// (0 and 1 both attach to 2; i and i+1 are joined for i >= 1).
inline bool dynkin_adjacent(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return false;
  if (i == 0) return j == 2;
  return j == i + 1;
}

/// All of W^p for rank n, lexicographic with Plus < Minus (identity first).
inline std::vector<PMSequence> enumerate_wp(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_wp: n must be at least 1");
  if (n > 24) throw std::invalid_argument("enumerate_wp: n too large");
  std::vector<PMSequence> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<Sign> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u ? Sign::Minus : Sign::Plus;
    out.emplace_back(std::move(e));
  }
  return out;
}

enum class MoveKind { Longer, Shorter, NotInQuotient };

struct Move {
  MoveKind kind;
  std::optional<PMSequence> target;  // set unless NotInQuotient
};

/// Right multiplication w -> w s_i inside W^p.
inline Move apply_generator(const PMSequence& w, GeneratorIndex i) {
  const int n = w.size();
  i.check(n);
  // s_0 needs two entries; for n = 1 it never stays inside the quotient.
  if (n < 2) return {MoveKind::NotInQuotient, std::nullopt};
  const int a = i.value == 0 ? 1 : i.value;
  const Sign x = w.at(a), y = w.at(a + 1);
  std::vector<Sign> e = w.entries();
  if (i.value == 0) {
    if (x != y) return {MoveKind::NotInQuotient, std::nullopt};
    e[0] = e[1] = opposite(x);
    return {x == Sign::Plus ? MoveKind::Longer : MoveKind::Shorter, PMSequence(std::move(e))};
  }
  if (x == y) return {MoveKind::NotInQuotient, std::nullopt};
  std::swap(e[static_cast<std::size_t>(a - 1)], e[static_cast<std::size_t>(a)]);
  return {x == Sign::Minus ? MoveKind::Longer : MoveKind::Shorter, PMSequence(std::move(e))};
}

/// A Young diagram inside the n x n square, stored by row lengths
/// (row 1 on top). Symmetric diagrams with an even diagonal model W^p.
class SymYoungDiagram {
public:
  SymYoungDiagram(int n, std::vector<int> rows) : n_(n), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != n_) throw std::invalid_argument("SymYoungDiagram: need n row lengths");
  }

  int n() const { return n_; }
  const std::vector<int>& rows() const { return rows_; }
  /// 1-based (row, column).
  bool contains(int r, int c) const {
    return r >= 1 && r <= n_ && c >= 1 && c <= rows_[static_cast<std::size_t>(r - 1)];
  }
  int box_count() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
  }
  int diagonal_count() const {
    int d = 0;
    for (int r = 1; r <= n_; ++r) d += contains(r, r);
    return d;
  }

  /// Partition shape in the square, symmetric, even diagonal.
  bool is_valid() const {
    for (int r = 0; r < n_; ++r) {
      if (rows_[static_cast<std::size_t>(r)] < 0 || rows_[static_cast<std::size_t>(r)] > n_) return false;
      if (r > 0 && rows_[static_cast<std::size_t>(r)] > rows_[static_cast<std::size_t>(r - 1)]) return false;
    }
    for (int r = 1; r <= n_; ++r)
      for (int c = 1; c <= n_; ++c)
        if (contains(r, c) != contains(c, r)) return false;
    return diagonal_count() % 2 == 0;
  }

  friend bool operator==(const SymYoungDiagram&, const SymYoungDiagram&) = default;
  friend auto operator<=>(const SymYoungDiagram&, const SymYoungDiagram&) = default;

private:
  int n_;
  std::vector<int> rows_;
};

/// Boundary path from the upper-right corner: the sequence read right to
/// left (minus = down, plus = left), followed by its mirror image in the
/// main diagonal. Every down step closes a row at the current width.
inline SymYoungDiagram young_diagram(const PMSequence& w) {
  const int n = w.size();
  std::vector<int> rows;
  int x = n;
  auto step = [&](bool down) {
    if (down)
      rows.push_back(x);
    else
      --x;
  };
  for (int i = n; i >= 1; --i) step(w.at(i) == Sign::Minus);
  for (int i = 1; i <= n; ++i) step(w.at(i) == Sign::Plus);
  return SymYoungDiagram(n, std::move(rows));
}

/// Reads a reduced word off the Young diagram: 2x2 blocks on the main
/// diagonal give s_0, a symmetric box pair on diagonals +-d gives s_d.
/// Boxes are emitted row by row, which respects the box order.
inline std::vector<int> reduced_word(const PMSequence& w) {
  const SymYoungDiagram y = young_diagram(w);
  const int n = y.n();
  std::vector<int> word;
  for (int r = 1; r <= n; ++r) {
    // Columns r and r+1 of an odd row r are covered by the diagonal block.
    int first_col = r + 1;
    if (r % 2 == 1 && y.contains(r, r)) {
      word.push_back(0);
      first_col = r + 2;
    }
    for (int c = first_col; c <= n && y.contains(r, c); ++c) word.push_back(c - r);
  }
  return word;
}

inline int length(const PMSequence& w) {
  const SymYoungDiagram y = young_diagram(w);
  const int blocks = y.diagonal_count() / 2;
  return (y.box_count() - 4 * blocks) / 2 + blocks;
}

/// Replays a word from the identity; throws unless every step is Longer.
inline PMSequence from_reduced_word(int n, const std::vector<int>& word) {
  PMSequence w = PMSequence::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k) {
    Move m = apply_generator(w, GeneratorIndex(word[k]));
    if (m.kind != MoveKind::Longer)
      throw std::invalid_argument("word is not a reduced word of an element of W^p (fails at letter " +
                                  std::to_string(k + 1) + ")");
    w = *m.target;
  }
  return w;
}

inline std::string format_word(const std::vector<int>& word) {
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(word[k]);
  }
  return s;
}

/// Parses "0,2,3,1". An empty string is the empty word.
inline std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    int value = 0;
    bool digits = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      digits = true;
      ++i;
    }
    if (!digits) throw ParseError("expected a generator index", start);
    word.push_back(value);
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError(std::string("unexpected character '") + text[i] + "' in word", i);
      ++i;
      if (i == text.size()) throw ParseError("trailing comma in word", i - 1);
    }
  }
  return word;
}

} // namespace kldn
