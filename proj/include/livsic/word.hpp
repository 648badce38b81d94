#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "livsic/error.hpp"

namespace livsic {

/// Which one-sided shift a word lives in.
///
/// Future (u) words are read w_0 w_1 ... w_{n-1}; the pivot w_0 is the first
/// symbol and the deepest symbol is the last. Past (s) words are stored in
/// time order w_{-(n-1)} ... w_0; the pivot is the last symbol and the deepest
/// is the first. Both are stored left to right in time order, so a word's
/// symbols can be handed to the two-sided cylinder measure unchanged.
enum class Side { u, s };

constexpr Side dual(Side side) { return side == Side::u ? Side::s : Side::u; }

constexpr std::string_view to_string(Side side) { return side == Side::u ? "u" : "s"; }

inline Side side_from_string(std::string_view text) {
  if (text == "u") return Side::u;
  if (text == "s") return Side::s;
  throw Error(Errc::parse_error, "side must be \"u\" or \"s\", got \"" + std::string(text) + "\"");
}

using Symbols = std::vector<int>;

struct Word {
  Side side = Side::u;
  Symbols symbols;

  [[nodiscard]] std::size_t depth() const { return symbols.size(); }
  [[nodiscard]] bool is_root() const { return symbols.empty(); }

  [[nodiscard]] int pivot() const { return side == Side::u ? symbols.front() : symbols.back(); }
  [[nodiscard]] int deepest() const { return side == Side::u ? symbols.back() : symbols.front(); }

  friend auto operator<=>(const Word&, const Word&) = default;
};

inline Word root(Side side) { return Word{side, {}}; }

/// Parent in the cylinder tree; the parent of a 1-cylinder is the root.
inline Word parent(const Word& w) {
  if (w.is_root()) throw Error(Errc::too_shallow, "the root has no mother");
  Word m = w;
  if (w.side == Side::u) m.symbols.pop_back();
  else m.symbols.erase(m.symbols.begin());
  return m;
}

/// i-th mother: drops the i deepest symbols. Requires i < depth.
inline Word mother(const Word& w, std::size_t i = 1) {
  if (i >= w.depth())
    throw Error(Errc::too_shallow, "cannot take mother " + std::to_string(i) + " of a " +
                                       std::to_string(w.depth()) + "-cylinder");
  Word m = w;
  if (w.side == Side::u) m.symbols.resize(w.depth() - i);
  else m.symbols.erase(m.symbols.begin(), m.symbols.begin() + static_cast<std::ptrdiff_t>(i));
  return m;
}

/// Child cylinder obtained by adding `b` at the deep end.
inline Word child(const Word& w, int b) {
  Word c = w;
  if (w.side == Side::u) c.symbols.push_back(b);
  else c.symbols.insert(c.symbols.begin(), b);
  return c;
}

/// The k deepest symbols (the whole word when k >= depth).
inline Word deep_part(const Word& w, std::size_t k) {
  if (k >= w.depth()) return w;
  Word d{w.side, {}};
  if (w.side == Side::u) d.symbols.assign(w.symbols.end() - static_cast<std::ptrdiff_t>(k), w.symbols.end());
  else d.symbols.assign(w.symbols.begin(), w.symbols.begin() + static_cast<std::ptrdiff_t>(k));
  return d;
}

/// Preimage under the expanding train-track map: a new pivot `x` is added at
/// the shallow end, pushing every other symbol one level deeper.
inline Word pull_back(const Word& w, int x) {
  Word p = w;
  if (w.side == Side::u) p.symbols.insert(p.symbols.begin(), x);
  else p.symbols.push_back(x);
  return p;
}

/// Length of the longest common ancestor of two words on the same side.
inline std::size_t common_depth(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.depth(), b.depth());
  std::size_t k = 0;
  if (a.side == Side::u) {
    while (k < n && a.symbols[k] == b.symbols[k]) ++k;
  } else {
    while (k < n && a.symbols[a.depth() - 1 - k] == b.symbols[b.depth() - 1 - k]) ++k;
  }
  return k;
}

/// A cylinder, or a gap named by its two flanking sibling cylinders.
struct Segment {
  Word word;                  ///< the cylinder, or the left flank of a gap
  std::optional<Word> right;  ///< right flank; set only for gaps

  static Segment cylinder(Word w) { return Segment{std::move(w), std::nullopt}; }
  static Segment gap(Word left, Word right) { return Segment{std::move(left), std::move(right)}; }

  [[nodiscard]] bool is_gap() const { return right.has_value(); }
  [[nodiscard]] Side side() const { return word.side; }
  [[nodiscard]] std::size_t depth() const { return word.depth(); }
  [[nodiscard]] Word mother() const { return parent(word); }

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Keeps only the `context` deepest symbols of the segment's mother.
inline Segment truncate_context(const Segment& x, std::size_t context) {
  if (x.depth() <= context + 1) return x;
  Segment t{deep_part(x.word, context + 1), std::nullopt};
  if (x.right) t.right = deep_part(*x.right, context + 1);
  return t;
}

inline Segment pull_back(const Segment& x, int sym) {
  Segment p{pull_back(x.word, sym), std::nullopt};
  if (x.right) p.right = pull_back(*x.right, sym);
  return p;
}

// ---- text form -------------------------------------------------------------
// Words are digit strings ("010"); the root is the empty string. Gaps are
// written "left|right". Alphabets above 10 symbols have no text form.

inline std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.depth());
  for (int s : w.symbols) out.push_back(static_cast<char>('0' + s));
  return out;
}

inline std::string to_string(const Segment& x) {
  return x.right ? to_string(x.word) + "|" + to_string(*x.right) : to_string(x.word);
}

inline Word parse_word(std::string_view text, Side side) {
  Word w{side, {}};
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(Errc::parse_error, "bad symbol in word \"" + std::string(text) + "\"");
    w.symbols.push_back(c - '0');
  }
  return w;
}

inline Segment parse_segment(std::string_view text, Side side) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return Segment::cylinder(parse_word(text, side));
  return Segment::gap(parse_word(text.substr(0, bar), side), parse_word(text.substr(bar + 1), side));
}

}  // namespace livsic
