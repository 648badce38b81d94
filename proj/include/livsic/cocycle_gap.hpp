#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "livsic/error.hpp"
#include "livsic/gibbs.hpp"
#include "livsic/layout.hpp"
#include "livsic/realization.hpp"
#include "livsic/sft.hpp"
#include "livsic/solenoid.hpp"
#include "livsic/word.hpp"

namespace livsic {

/// J(C) = kappa(C) / kappa(mC), with kappa read off the `depth` deepest
/// symbols of a cylinder. Cylinders shallower than `depth` (and the root)
/// have kappa = 1; depth 0 is the trivial cocycle.
struct MeasureLengthCocycle {
  Side side = Side::u;
  std::size_t depth = 0;
  std::map<Word, double> kappa;

  static MeasureLengthCocycle trivial(Side side) { return MeasureLengthCocycle{side, 0, {}}; }

  [[nodiscard]] double kappa_of(const Word& c) const {
    if (depth == 0 || c.depth() < depth) return 1.0;
    const auto key = deep_part(c, depth);
    if (auto it = kappa.find(key); it != kappa.end()) return it->second;
    throw Error(Errc::missing_pair_value, "no kappa value for \"" + to_string(key) + "\"");
  }

  [[nodiscard]] double operator()(const Word& c) const { return kappa_of(c) / kappa_of(parent(c)); }

  [[nodiscard]] double kappa_min() const {
    double lo = 1.0;
    for (const auto& [w, v] : kappa) lo = std::min(lo, v);
    return lo;
  }
  [[nodiscard]] double log_kappa_sup() const {
    double hi = 0.0;
    for (const auto& [w, v] : kappa) hi = std::max(hi, std::abs(std::log(v)));
    return hi;
  }

  friend bool operator==(const MeasureLengthCocycle&, const MeasureLengthCocycle&) = default;
};

/// gamma(G1 : G2) on sibling gaps, looked up on descriptors whose mother is
/// truncated to `depth` symbols. An empty table is gamma = 1.
struct GapRatioFn {
  Side side = Side::u;
  std::size_t depth = 1;
  std::map<SegmentPair, double> values;

  static GapRatioFn unit(Side side) { return GapRatioFn{side, 1, {}}; }

  [[nodiscard]] bool is_unit() const { return values.empty(); }

  [[nodiscard]] std::optional<double> find(const Segment& a, const Segment& b) const {
    if (a == b || is_unit()) return 1.0;
    const auto ta = truncate_context(a, depth), tb = truncate_context(b, depth);
    if (auto it = values.find({ta, tb}); it != values.end()) return it->second;
    if (auto it = values.find({tb, ta}); it != values.end()) return 1.0 / it->second;
    return std::nullopt;
  }

  [[nodiscard]] double operator()(const Segment& a, const Segment& b) const {
    if (auto v = find(a, b)) return *v;
    throw Error(Errc::missing_pair_value, "no gap ratio for (" + to_string(a) + " : " + to_string(b) + ")");
  }

  friend bool operator==(const GapRatioFn&, const GapRatioFn&) = default;
};

struct CocycleGapPair {
  GapRatioFn gamma;
  MeasureLengthCocycle cocycle;

  friend bool operator==(const CocycleGapPair&, const CocycleGapPair&) = default;
};

// ---- validation ---------------------------------------------------------------

struct CocycleReport {
  bool admissible = false;
  double margin = 0.0;  ///< min over mothers of 1 - sum J rho^{1/delta} e^{P/delta}
  Word worst;           ///< mother attaining the margin
};

namespace detail {

inline std::size_t synthesis_context(const GibbsTable& g, const CocycleGapPair& pair) {
  return std::max({g.range() - 1, pair.cocycle.depth, pair.gamma.depth, std::size_t{1}});
}

inline double conditional(const GibbsTable& g, const Word& c) {
  const Word m = parent(c);
  return g.measure(c) / (m.is_root() ? 1.0 : g.measure(m));
}

}  // namespace detail

/// Checks sum over children C of L of J(C) rho(C:L)^{1/delta} e^{P/delta} < 1
/// at the root and at every mother up to one level past the stabilized context.
inline CocycleReport validate_cocycle(const MeasureLengthCocycle& cocycle, const GibbsTable& g, double delta,
                                      double pressure) {
  const std::size_t c = std::max({g.range() - 1, cocycle.depth, std::size_t{1}});
  CocycleReport report{true, std::numeric_limits<double>::infinity(), {}};
  for (const auto& mother : detail::mothers_to_depth(g.system(), cocycle.side, c + 1)) {
    double sum = 0.0;
    for (int b : g.system().extensions(mother)) {
      const Word kid = child(mother, b);
      sum += cocycle(kid) * std::pow(detail::conditional(g, kid), 1.0 / delta) * std::exp(pressure / delta);
    }
    if (1.0 - sum < report.margin) {
      report.margin = 1.0 - sum;
      report.worst = mother;
    }
  }
  report.admissible = report.margin > 0.0;
  return report;
}

struct GapRatioReport {
  bool valid = false;
  double v_min = 1.0;
  double v_max = 1.0;
  double triple_residual = 0.0;
  double reciprocal_residual = 0.0;
  double holder = 0.0;
};

/// Bounds, the cocycle identity on every stored triple of sibling gaps, and
/// reciprocity where both orders are stored.
inline GapRatioReport validate_gap_ratio(const GapRatioFn& gamma, double alpha = 1.0, double tol = 1e-12) {
  GapRatioReport report;
  std::map<Word, std::set<Segment>> by_mother;
  for (const auto& [key, v] : gamma.values) {
    report.v_min = std::min({report.v_min, v, 1.0 / v});
    report.v_max = std::max({report.v_max, v, 1.0 / v});
    by_mother[key.first.mother()].insert(key.first);
    by_mother[key.second.mother()].insert(key.second);
    if (auto it = gamma.values.find({key.second, key.first}); it != gamma.values.end())
      report.reciprocal_residual = std::max(report.reciprocal_residual, std::abs(v * it->second - 1.0));
  }
  auto stored = [&](const Segment& a, const Segment& b) -> std::optional<double> {
    if (a == b) return 1.0;
    if (auto it = gamma.values.find({a, b}); it != gamma.values.end()) return it->second;
    if (auto it = gamma.values.find({b, a}); it != gamma.values.end()) return 1.0 / it->second;
    return std::nullopt;
  };
  for (const auto& [mother, gaps] : by_mother) {
    for (const auto& a : gaps)
      for (const auto& b : gaps)
        for (const auto& c : gaps) {
          if (a == b || b == c || a == c) continue;
          const auto ab = stored(a, b), ac = stored(a, c), cb = stored(c, b);
          if (ab && ac && cb) report.triple_residual = std::max(report.triple_residual, std::abs(*ab - *ac * *cb));
        }
  }
  SolenoidSpec as_spec;
  as_spec.values = gamma.values;
  report.holder = holder_modulus(as_spec, alpha);
  report.valid = report.v_min > 0.0 && std::isfinite(report.v_max) && report.triple_residual <= tol &&
                 report.reciprocal_residual <= tol && std::isfinite(report.holder);
  return report;
}

// ---- synthesis ------------------------------------------------------------------

/// Ratio function of the pair: r(C:L) = J(C) rho(C:L)^{1/delta} e^{P/delta}
/// for cylinders, and the remainder 1 - sum r(D:L) split among the gaps of L
/// in proportion to gamma.
inline RatioFn synthesis_ratio(const GibbsTable& g, double delta, double pressure, const CocycleGapPair& pair,
                               const GapLayout& layout) {
  auto table = std::make_shared<const GibbsTable>(g);
  auto cylinder = [table, delta, pressure, pair](const Word& c) {
    return pair.cocycle(c) * std::pow(detail::conditional(*table, c), 1.0 / delta) * std::exp(pressure / delta);
  };
  return [cylinder, layout, pair](const Segment& x) {
    if (!x.is_gap()) return cylinder(x.word);
    const Word m = x.mother();
    double used = 0.0;
    for (const auto& c : layout.cylinders(m)) used += cylinder(c.word);
    if (!(used < 1.0))
      throw Error(Errc::inadmissible_pair, "children of \"" + to_string(m) + "\" leave no room for gaps");
    double weights = 0.0;
    for (const auto& gap : layout.gaps(m)) weights += pair.gamma(gap, x);
    return (1.0 - used) / weights;
  };
}

inline TrainTrackRealization synthesize_ratio(const GibbsTable& g, double delta, double pressure,
                                              const CocycleGapPair& pair, const GapLayout& layout, std::size_t depth) {
  if (pair.cocycle.side != layout.side || pair.gamma.side != layout.side)
    throw Error(Errc::mismatched_systems, "cocycle-gap pair and layout are on different sides");
  const std::size_t c = detail::synthesis_context(g, pair);
  auto ratio = synthesis_ratio(g, delta, pressure, pair, layout);
  // Every descriptor appears among mothers of depth <= c; check them all
  // before building so inadmissibility does not depend on the requested depth.
  for (const auto& mother : detail::mothers_to_depth(g.system(), layout.side, c)) {
    double sum = 0.0;
    for (const auto& x : layout.slots(mother)) sum += ratio(x);
    if (!layout.of(mother).gap_count() && std::abs(sum - 1.0) > 1e-12)
      throw Error(Errc::inadmissible_pair, "no-gap mother \"" + to_string(mother) + "\" has children summing to " +
                                               std::to_string(sum));
  }
  return TrainTrackRealization(g.system(), layout, std::move(ratio), c, delta, pressure, depth);
}

// ---- the cocycle-gap property ----------------------------------------------------

/// Propagates every cylinder-gap identification through the ratio function
/// synthesized to `depth`, reads off the cocycle and gap ratios it induces on
/// the image rectangle and compares them with the pair's own values.
/// Identifications are used at the depths they are listed; tables should
/// list every context up to the synthesis context depth.
inline std::vector<Residual> check_cocycle_gap_property(const CocycleGapPair& pair,
                                                        const std::optional<BoundaryData>& data, const GibbsTable& g,
                                                        double delta, double pressure, const GapLayout& layout,
                                                        std::size_t depth) {
  if (!data) throw Error(Errc::missing_boundary_data, "the cocycle-gap property needs boundary data");
  std::vector<Residual> out;
  if (data->cylinder_gap.empty()) return out;
  const auto tt = synthesize_ratio(g, delta, pressure, pair, layout, depth);
  const double scale = std::exp(pressure / delta);
  for (const auto& inst : data->cylinder_gap) {
    if (inst.side != layout.side) continue;
    const auto& id = inst.id;
    detail::require(!inst.cylinder.is_gap() && inst.gap.is_gap(), id, "needs a cylinder and a gap");
    detail::require(inst.segments.size() >= 2 && inst.segments.back().is_gap(), id, "last segment must be a gap");
    const Segment& target_gap = inst.segments.back();
    // The cylinder carrying the identified image of I.
    Segment image = inst.segments.front();
    if (inst.segments.size() > 2) {
      image = Segment::cylinder(image.mother());
      const auto kids = layout.slots(image.word);
      detail::require(std::equal(kids.begin(), kids.end(), inst.segments.begin(), inst.segments.end() - 1), id,
                      "leading segments must be exactly the slots of one cylinder");
    }
    detail::require(!image.is_gap() && image.depth() == target_gap.depth() && image.mother() == target_gap.mother(),
                    id, "image cylinder and gap must be siblings");
    const Word mother = image.mother();
    const double t = tt.length(inst.cylinder) / tt.length(inst.gap);
    double others = 0.0;
    for (const auto& c : layout.cylinders(mother))
      if (c != image) others += tt.child_ratio(c);
    double weights = 0.0;
    for (const auto& gap : layout.gaps(mother)) weights += pair.gamma(gap, target_gap);
    const double x = t * (1.0 - others) / (weights + t);
    const double rho = std::pow(detail::conditional(g, image.word), 1.0 / delta);
    const std::string where = id + "@" + to_string(inst.cylinder);
    out.push_back(detail::make_residual(where + "/J", pair.cocycle(image.word), x / (rho * scale)));
    // Gap length implied by the identification, against each sibling gap.
    const double induced_gap = tt.child_ratio(image) / t;
    for (const auto& gap : layout.gaps(mother))
      out.push_back(detail::make_residual(where + "/gamma:" + to_string(gap), pair.gamma(gap, target_gap),
                                          tt.child_ratio(gap) / induced_gap));
  }
  return out;
}

}  // namespace livsic
