#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "livsic/error.hpp"
#include "livsic/sft.hpp"
#include "livsic/word.hpp"

namespace livsic {

/// Order of the children of one mother, with gaps between some neighbours.
struct MotherLayout {
  std::vector<int> children;
  std::vector<bool> gap_after;  ///< gap_after[i]: gap between children[i] and children[i+1]

  [[nodiscard]] std::size_t gap_count() const {
    return static_cast<std::size_t>(std::count(gap_after.begin(), gap_after.end(), true));
  }

  friend bool operator==(const MotherLayout&, const MotherLayout&) = default;
};

/// Train-track combinatorics of one side: how the children of every mother
/// are ordered and where the gaps sit. The arrangement below a mother only
/// depends on its deepest symbol (which fixes the admissible children).
struct GapLayout {
  Side side = Side::u;
  MotherLayout root;
  std::vector<MotherLayout> by_symbol;

  [[nodiscard]] const MotherLayout& of(const Word& mother) const {
    return mother.is_root() ? root : by_symbol.at(static_cast<std::size_t>(mother.deepest()));
  }

  [[nodiscard]] bool has_gaps() const {
    if (root.gap_count() > 0) return true;
    return std::any_of(by_symbol.begin(), by_symbol.end(), [](const MotherLayout& m) { return m.gap_count() > 0; });
  }

  /// Children and gaps of `mother`, left to right.
  [[nodiscard]] std::vector<Segment> slots(const Word& mother) const {
    const auto& ml = of(mother);
    std::vector<Segment> out;
    for (std::size_t i = 0; i < ml.children.size(); ++i) {
      out.push_back(Segment::cylinder(child(mother, ml.children[i])));
      if (i + 1 < ml.children.size() && ml.gap_after[i])
        out.push_back(Segment::gap(child(mother, ml.children[i]), child(mother, ml.children[i + 1])));
    }
    return out;
  }

  [[nodiscard]] std::vector<Segment> gaps(const Word& mother) const {
    auto all = slots(mother);
    std::erase_if(all, [](const Segment& x) { return !x.is_gap(); });
    return all;
  }

  [[nodiscard]] std::vector<Segment> cylinders(const Word& mother) const {
    auto all = slots(mother);
    std::erase_if(all, [](const Segment& x) { return x.is_gap(); });
    return all;
  }

  /// True when `x` is a cylinder or gap slot of its mother under this layout.
  [[nodiscard]] bool contains(const Segment& x) const {
    if (x.side() != side || x.depth() == 0) return false;
    const auto s = slots(x.mother());
    return std::find(s.begin(), s.end(), x) != s.end();
  }

  friend bool operator==(const GapLayout&, const GapLayout&) = default;
};

inline void validate_layout(const SftSystem& sys, const GapLayout& layout) {
  auto check = [&](const MotherLayout& ml, const Word& mother, const std::string& where) {
    auto expected = sys.extensions(mother);
    auto got = ml.children;
    std::sort(got.begin(), got.end());
    if (got != expected) throw Error(Errc::parse_error, "layout " + where + " does not list the admissible children");
    if (ml.gap_after.size() + 1 != ml.children.size())
      throw Error(Errc::parse_error, "layout " + where + " needs one gap flag between each pair of children");
  };
  check(layout.root, root(layout.side), "root");
  if (layout.by_symbol.size() != sys.k) throw Error(Errc::parse_error, "layout needs one entry per symbol");
  for (std::size_t a = 0; a < sys.k; ++a)
    check(layout.by_symbol[a], Word{layout.side, {static_cast<int>(a)}}, "for symbol " + std::to_string(a));
}

/// Children in ascending order with no gaps anywhere.
inline GapLayout no_gap_layout(const SftSystem& sys, Side side) {
  auto make = [&](const Word& mother) {
    MotherLayout ml{sys.extensions(mother), {}};
    ml.gap_after.assign(ml.children.size() - 1, false);
    return ml;
  };
  GapLayout layout{side, make(root(side)), {}};
  for (std::size_t a = 0; a < sys.k; ++a) layout.by_symbol.push_back(make(Word{side, {static_cast<int>(a)}}));
  return layout;
}

/// Children in ascending order with a gap between every pair of neighbours.
inline GapLayout full_gap_layout(const SftSystem& sys, Side side) {
  GapLayout layout = no_gap_layout(sys, side);
  auto fill = [](MotherLayout& ml) { std::fill(ml.gap_after.begin(), ml.gap_after.end(), true); };
  fill(layout.root);
  for (auto& ml : layout.by_symbol) fill(ml);
  return layout;
}

}  // namespace livsic
