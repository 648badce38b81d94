#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "livsic/error.hpp"
#include "livsic/gibbs.hpp"
#include "livsic/layout.hpp"
#include "livsic/realization.hpp"
#include "livsic/sft.hpp"
#include "livsic/word.hpp"

namespace livsic {

enum class SolenoidKind { leaf_leaf, leaf_gap };

inline std::string_view to_string(SolenoidKind kind) { return kind == SolenoidKind::leaf_leaf ? "leaf-leaf" : "leaf-gap"; }

inline SolenoidKind solenoid_kind_from_string(std::string_view text) {
  if (text == "leaf-leaf") return SolenoidKind::leaf_leaf;
  if (text == "leaf-gap") return SolenoidKind::leaf_gap;
  throw Error(Errc::parse_error, "unknown solenoid kind \"" + std::string(text) + "\"");
}

using SegmentPair = std::pair<Segment, Segment>;

/// Values sigma(a:b) on pairs of adjacent segments.
///
/// Each pair is stored once in canonical order (first < second) and the
/// reverse order is its reciprocal. Sibling pairs under mothers deeper than
/// `context_depth` are looked up on their truncated descriptors.
struct SolenoidSpec {
  Side side = Side::u;
  SolenoidKind kind = SolenoidKind::leaf_leaf;
  std::size_t context_depth = 1;
  GapLayout layout;
  std::map<SegmentPair, double> values;
  bool boundary_agnostic = false;
  double holder_exponent = 1.0;

  void set(const Segment& a, const Segment& b, double v) {
    if (a == b) return;
    if (a < b) values[{a, b}] = v;
    else values[{b, a}] = 1.0 / v;
  }

  [[nodiscard]] std::optional<double> find(const Segment& a, const Segment& b) const {
    if (a == b) return 1.0;
    if (auto v = find_stored(a, b)) return v;
    if (a.depth() > 0 && a.depth() == b.depth() && a.mother() == b.mother() && a.depth() > context_depth + 1)
      return find_stored(truncate_context(a, context_depth), truncate_context(b, context_depth));
    return std::nullopt;
  }

  [[nodiscard]] double operator()(const Segment& a, const Segment& b) const {
    if (auto v = find(a, b)) return *v;
    throw Error(Errc::missing_pair_value, "no solenoid value for (" + to_string(a) + " : " + to_string(b) + ")");
  }

  [[nodiscard]] double v_min() const {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& [key, v] : values) lo = std::min({lo, v, 1.0 / v});
    return lo;
  }
  [[nodiscard]] double v_max() const { return 1.0 / v_min(); }

  friend bool operator==(const SolenoidSpec&, const SolenoidSpec&) = default;

 private:
  [[nodiscard]] std::optional<double> find_stored(const Segment& a, const Segment& b) const {
    if (auto it = values.find({a, b}); it != values.end()) return it->second;
    if (auto it = values.find({b, a}); it != values.end()) return 1.0 / it->second;
    return std::nullopt;
  }
};

/// Copy of `spec` with sigma(a:b) multiplied by `factor` (and sigma(b:a) divided).
inline SolenoidSpec perturbed(SolenoidSpec spec, const Segment& a, const Segment& b, double factor) {
  spec.set(a, b, spec(a, b) * factor);
  return spec;
}

namespace detail {

inline std::vector<Word> mothers_to_depth(const SftSystem& sys, Side side, std::size_t depth) {
  std::vector<Word> out{root(side)};
  for (std::size_t n = 1; n <= depth; ++n)
    for (auto& w : enumerate_cylinders(sys, n, side)) out.push_back(std::move(w));
  return out;
}

template <typename F>
void for_each_instance_pair(const BoundaryData& data, Side side, F&& add) {
  for (const auto& m : data.matching) {
    if (m.side != side) continue;
    add(m.first, m.second);
    for (std::size_t i = 1; i < m.decomposition.size(); ++i) add(m.decomposition[i], m.decomposition[i - 1]);
  }
  for (const auto& b : data.boundary) {
    if (b.side != side) continue;
    for (const auto* chain : {&b.first, &b.second}) {
      const Segment* prev = &b.base;
      for (const auto& x : *chain) {
        add(x, *prev);
        prev = &x;
      }
    }
  }
  for (const auto& c : data.cylinder_gap)
    if (c.side == side) add(c.cylinder, c.gap);
}

}  // namespace detail

/// Length ratios of adjacent sibling slots under mothers of depth <= the
/// realization's context, plus every pair referenced by `data` on tt's side.
inline SolenoidSpec solenoid_from_realization(const TrainTrackRealization& tt,
                                              const std::optional<BoundaryData>& data = std::nullopt) {
  if (tt.depth() < 3) throw Error(Errc::depth_too_shallow, "solenoid extraction needs realization depth >= 3");
  SolenoidSpec spec;
  spec.side = tt.side();
  spec.kind = tt.layout().has_gaps() ? SolenoidKind::leaf_gap : SolenoidKind::leaf_leaf;
  spec.context_depth = tt.context_depth();
  spec.layout = tt.layout();
  spec.boundary_agnostic = !data.has_value();
  for (const auto& mother : detail::mothers_to_depth(tt.system(), tt.side(), tt.context_depth())) {
    const auto slots = tt.layout().slots(mother);
    for (std::size_t i = 0; i + 1 < slots.size(); ++i)
      spec.set(slots[i], slots[i + 1], tt.length(slots[i]) / tt.length(slots[i + 1]));
  }
  if (data) {
    detail::for_each_instance_pair(*data, tt.side(), [&](const Segment& a, const Segment& b) {
      spec.set(a, b, tt.length(a) / tt.length(b));
    });
  }
  return spec;
}

/// Measure ratios of neighbouring sibling cylinders (gaps skipped) under
/// mothers of depth 1..max(m-1, 1).
inline SolenoidSpec solenoid_from_gibbs(const GibbsTable& g, Side side, const GapLayout& layout,
                                        const std::optional<BoundaryData>& data = std::nullopt) {
  SolenoidSpec spec;
  spec.side = side;
  spec.kind = SolenoidKind::leaf_leaf;
  spec.context_depth = std::max<std::size_t>(g.range() - 1, 1);
  spec.layout = layout;
  spec.boundary_agnostic = !data.has_value();
  for (const auto& mother : detail::mothers_to_depth(g.system(), side, spec.context_depth)) {
    if (mother.is_root()) continue;
    const auto cyl = layout.cylinders(mother);
    for (std::size_t i = 0; i + 1 < cyl.size(); ++i)
      spec.set(cyl[i], cyl[i + 1], g.measure(cyl[i].word) / g.measure(cyl[i + 1].word));
  }
  return spec;
}
inline SolenoidSpec solenoid_from_gibbs(const GibbsTable& g, Side side) {
  return solenoid_from_gibbs(g, side, no_gap_layout(g.system(), side));
}

// ---- the scaling extension -----------------------------------------------------

/// s(X:Y) = |X|/|Y| for nested or related segments, rebuilt from the
/// sibling values alone.
class ScalingExtension {
 public:
  explicit ScalingExtension(SolenoidSpec spec) : spec_(std::move(spec)) {}

  [[nodiscard]] const SolenoidSpec& source() const { return spec_; }

  /// s(mJ : J): one plus the sums of chained neighbour ratios on each side of J.
  /// Leaf-leaf functions skip gaps.
  [[nodiscard]] double mother_over_child(const Segment& j) const {
    const auto slots = spec_.kind == SolenoidKind::leaf_leaf ? spec_.layout.cylinders(j.mother())
                                                             : spec_.layout.slots(j.mother());
    std::size_t pos = slots.size();
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i] == j) pos = i;
    if (pos == slots.size())
      throw Error(Errc::missing_pair_value, "\"" + to_string(j) + "\" is not a slot of its mother");
    double total = 1.0;
    double chain = 1.0;
    for (std::size_t i = pos; i-- > 0;) {
      chain *= spec_(slots[i], slots[i + 1]);
      total += chain;
    }
    chain = 1.0;
    for (std::size_t i = pos + 1; i < slots.size(); ++i) {
      chain *= spec_(slots[i], slots[i - 1]);
      total += chain;
    }
    return total;
  }

  /// s(X : Y) through the deepest common ancestor cylinder of X and Y.
  [[nodiscard]] double operator()(const Segment& x, const Segment& y) const {
    if (x == y) return 1.0;
    const auto ax = ancestors(x);
    const auto ay = ancestors(y);
    // ancestors() lists the segment, then its mothers up to the root.
    for (std::size_t i = 0; i < ax.size(); ++i) {
      for (std::size_t j = 0; j < ay.size(); ++j) {
        if (ax[i] != ay[j]) continue;
        return down(ay, j) / down(ax, i);
      }
    }
    throw Error(Errc::missing_pair_value, "\"" + to_string(x) + "\" and \"" + to_string(y) + "\" are on different sides");
  }

 private:
  static std::vector<Segment> ancestors(const Segment& x) {
    std::vector<Segment> out{x};
    Word w = x.is_gap() ? x.mother() : x.word;
    if (x.is_gap()) out.push_back(Segment::cylinder(w));
    while (!w.is_root()) {
      w = parent(w);
      out.push_back(Segment::cylinder(w));
    }
    return out;
  }

  /// s(chain[top] : chain[0]) for a chain segment, mother, grandmother, ...
  [[nodiscard]] double down(const std::vector<Segment>& chain, std::size_t top) const {
    double s = 1.0;
    for (std::size_t i = 0; i < top; ++i) s *= mother_over_child(chain[i]);
    return s;
  }

  SolenoidSpec spec_;
};

inline ScalingExtension extend_scaling(const SolenoidSpec& spec) { return ScalingExtension(spec); }

// ---- condition checks ----------------------------------------------------------

struct Residual {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

inline double max_residual(const std::vector<Residual>& rs) {
  double worst = 0.0;
  for (const auto& r : rs) worst = std::max(worst, r.residual);
  return worst;
}

namespace detail {

inline Residual make_residual(std::string id, double lhs, double rhs) {
  return Residual{std::move(id), lhs, rhs, std::abs(lhs - rhs)};
}

inline void require(bool ok, const std::string& id, const char* what) {
  if (!ok) throw Error(Errc::malformed_instance, "instance " + id + ": " + what);
}

}  // namespace detail

/// sigma(I:J) against (1 + sum_{j<k} prod sigma(I_i:I_{i-1})) / (sum_{j>=k} prod ...).
inline std::vector<Residual> check_matching(const SolenoidSpec& sigma, const BoundaryData& data) {
  std::vector<Residual> out;
  for (const auto& m : data.matching) {
    if (m.side != sigma.side) continue;
    const auto& d = m.decomposition;
    detail::require(d.size() >= 2 && m.split >= 1 && m.split < d.size(), m.id, "split must lie inside the decomposition");
    double num = 1.0, den = 0.0, chain = 1.0;
    for (std::size_t j = 1; j < d.size(); ++j) {
      chain *= sigma(d[j], d[j - 1]);
      (j < m.split ? num : den) += chain;
    }
    out.push_back(detail::make_residual(m.id, sigma(m.first, m.second), num / den));
  }
  return out;
}

/// The two nested sums sum_i prod_{j<=i} sigma(I_j:I_{j-1}), I_0 = base.
inline std::vector<Residual> check_boundary(const SolenoidSpec& sigma, const BoundaryData& data) {
  std::vector<Residual> out;
  for (const auto& b : data.boundary) {
    if (b.side != sigma.side) continue;
    detail::require(!b.first.empty() && !b.second.empty(), b.id, "both decompositions must be non-empty");
    auto nested = [&](const std::vector<Segment>& chain) {
      double total = 0.0, prod = 1.0;
      const Segment* prev = &b.base;
      for (const auto& x : chain) {
        prod *= sigma(x, *prev);
        total += prod;
        prev = &x;
      }
      return total;
    };
    out.push_back(detail::make_residual(b.id, nested(b.first), nested(b.second)));
  }
  return out;
}

/// sigma(I, K) against sum_{i<m} s(J_i, J_m).
inline std::vector<Residual> check_cylinder_gap(const ScalingExtension& ext, const BoundaryData& data) {
  const auto& sigma = ext.source();
  std::vector<Residual> out;
  for (const auto& c : data.cylinder_gap) {
    if (c.side != sigma.side) continue;
    detail::require(!c.cylinder.is_gap() && c.gap.is_gap(), c.id, "needs a cylinder and a gap");
    detail::require(c.segments.size() >= 2 && c.segments.back().is_gap(), c.id, "last segment must be a gap");
    double rhs = 0.0;
    for (std::size_t i = 0; i + 1 < c.segments.size(); ++i) rhs += ext(c.segments[i], c.segments.back());
    out.push_back(detail::make_residual(c.id, sigma(c.cylinder, c.gap), rhs));
  }
  return out;
}
inline std::vector<Residual> check_cylinder_gap(const SolenoidSpec& sigma, const BoundaryData& data) {
  return check_cylinder_gap(ScalingExtension(sigma), data);
}

/// rho_xi(C_2)/rho_xi(C_1) against the split sums of rho_eta(D_i).
inline std::vector<Residual> check_cylinder_cylinder(const GibbsTable& g, const BoundaryData& data) {
  std::vector<Residual> out;
  for (const auto& c : data.cylinder_cylinder) {
    const auto& d = c.decomposition;
    detail::require(d.size() >= 2 && c.split >= 1 && c.split < d.size(), c.id, "split must lie inside the decomposition");
    detail::require(c.leaf.side == dual(c.side) && c.other_leaf.side == dual(c.side), c.id, "leaves must be dual-side words");
    const double lhs = extended_scaling(g, c.leaf, c.second) / extended_scaling(g, c.leaf, c.first);
    double first = 0.0, second = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) (i < c.split ? first : second) += extended_scaling(g, c.other_leaf, d[i]);
    out.push_back(detail::make_residual(c.id, lhs, second / first));
  }
  return out;
}

// ---- bounded equivalence -------------------------------------------------------

struct BoundedReport {
  bool bounded = false;
  double bound = 0.0;   ///< the constant at the requested depth
  double growth = 0.0;  ///< bound(N) - bound(N-2)
};

namespace detail {

/// max over cylinders J of depth 2..n+1 of f(J, primary ancestor of J).
template <typename F>
double max_over_chains(const SftSystem& sys, Side side, std::size_t n, F&& f) {
  double worst = 0.0;
  for (std::size_t d = 2; d <= n + 1; ++d)
    for (const auto& w : enumerate_cylinders(sys, d, side)) worst = std::max(worst, f(w, mother(w, d - 1)));
  return worst;
}

inline BoundedReport stabilization(double at_n, double at_n_minus_2) {
  const double growth = at_n - at_n_minus_2;
  return BoundedReport{growth < 1e-6, at_n, growth};
}

}  // namespace detail

/// C(N) = max |log s1(J, m^i J) - log s2(J, m^i J)| over cylinders to depth
/// N+1; bounded when C grows by less than 1e-6 from N-2 to N.
inline BoundedReport bounded_equivalence(const SolenoidSpec& a, const SolenoidSpec& b, const SftSystem& sys,
                                         std::size_t depth) {
  if (a.side != b.side) throw Error(Errc::mismatched_systems, "solenoid functions on different sides");
  const ScalingExtension sa(a), sb(b);
  auto bound = [&](std::size_t n) {
    return detail::max_over_chains(sys, a.side, n, [&](const Word& j, const Word& top) {
      const auto J = Segment::cylinder(j), T = Segment::cylinder(top);
      return std::abs(std::log(sa(J, T)) - std::log(sb(J, T)));
    });
  };
  return detail::stabilization(bound(depth), bound(depth >= 2 ? depth - 2 : 0));
}

/// max over cylinders D (depth 2..N+1) and stabilized leaves xi of
/// |delta log s(D : D_0) - log rho_xi(D) - nP|, n the number of levels below D_0.
inline BoundedReport bounded_solenoid_class_check(const SolenoidSpec& sigma, const GibbsTable& g, double delta,
                                                  double pressure, std::size_t depth) {
  const ScalingExtension ext(sigma);
  const auto& sys = g.system();
  const std::size_t leaf_len = std::max<std::size_t>(g.range() - 1, 1);
  const auto leaves = enumerate_cylinders(sys, leaf_len, dual(sigma.side));
  auto bound = [&](std::size_t n) {
    return detail::max_over_chains(sys, sigma.side, n, [&](const Word& d, const Word& top) {
      const double levels = static_cast<double>(d.depth() - 1);
      const double s = std::log(ext(Segment::cylinder(d), Segment::cylinder(top)));
      double worst = 0.0;
      for (const auto& xi : leaves) {
        if (xi.pivot() != d.pivot()) continue;
        const double rho = extended_scaling(g, xi, d);
        worst = std::max(worst, std::abs(delta * s - std::log(rho) - levels * pressure));
      }
      return worst;
    });
  };
  return detail::stabilization(bound(depth), bound(depth >= 2 ? depth - 2 : 0));
}

/// Empirical sup |sigma(t) - sigma(t')| / d(t, t')^alpha over stored pairs of
/// the same mother shape, with d = 2^{-n} for descriptors agreeing to depth n.
inline double holder_modulus(const SolenoidSpec& sigma, double alpha) {
  std::vector<std::pair<SegmentPair, double>> entries(sigma.values.begin(), sigma.values.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const auto& [p, v] = entries[i];
      const auto& [q, w] = entries[j];
      if (p.first.is_gap() != q.first.is_gap() || p.second.is_gap() != q.second.is_gap()) continue;
      const auto n = std::min(common_depth(p.first.word, q.first.word), common_depth(p.second.word, q.second.word));
      worst = std::max(worst, std::abs(v - w) / std::pow(std::exp2(-static_cast<double>(n)), alpha));
    }
  }
  return worst;
}

}  // namespace livsic
