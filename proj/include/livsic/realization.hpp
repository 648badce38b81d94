#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "livsic/error.hpp"
#include "livsic/gibbs.hpp"
#include "livsic/layout.hpp"
#include "livsic/linalg.hpp"
#include "livsic/sft.hpp"
#include "livsic/word.hpp"

namespace livsic {

/// r(x : mother(x)) for a cylinder or gap x.
using RatioFn = std::function<double(const Segment&)>;

/// Lengths of every cylinder and gap of one side's train-track down to a
/// fixed depth, generated from a locally constant ratio function.
///
/// Child ratios depend only on the `context_depth` deepest symbols of the
/// mother; the stored RatioFn is consulted on truncated segments so the
/// realization is f-invariant by construction.
class TrainTrackRealization {
 public:
  TrainTrackRealization(SftSystem sys, GapLayout layout, RatioFn ratio, std::size_t context_depth, double delta,
                        double pressure, std::size_t depth)
      : sys_(std::move(sys)),
        layout_(std::move(layout)),
        ratio_(std::move(ratio)),
        context_(std::max<std::size_t>(context_depth, 1)),
        delta_(delta),
        pressure_(pressure),
        depth_(depth) {
    build();
  }

  [[nodiscard]] Side side() const { return layout_.side; }
  [[nodiscard]] const SftSystem& system() const { return sys_; }
  [[nodiscard]] const GapLayout& layout() const { return layout_; }
  [[nodiscard]] std::size_t context_depth() const { return context_; }
  [[nodiscard]] std::size_t depth() const { return depth_; }
  [[nodiscard]] double delta() const { return delta_; }
  [[nodiscard]] double pressure() const { return pressure_; }
  [[nodiscard]] const std::map<Segment, double>& lengths() const { return lengths_; }

  /// r(x : mother(x)).
  [[nodiscard]] double child_ratio(const Segment& x) const { return ratio_(truncate_context(x, context_)); }

  /// Length of x, from the table down to depth() and by chaining below.
  [[nodiscard]] double length(const Segment& x) const {
    if (auto it = lengths_.find(x); it != lengths_.end()) return it->second;
    if (x.depth() == 0) return 1.0;
    return child_ratio(x) * length(Segment::cylinder(x.mother()));
  }
  [[nodiscard]] double length(const Word& w) const { return w.is_root() ? 1.0 : length(Segment::cylinder(w)); }

  [[nodiscard]] double ratio(const Segment& a, const Segment& b) const { return length(a) / length(b); }

 private:
  void build() {
    std::vector<Word> level{root(side())};
    for (std::size_t n = 1; n <= depth_; ++n) {
      std::vector<Word> next;
      for (const auto& mother : level) {
        const double base = length(mother);
        double sum = 0.0;
        for (const auto& x : layout_.slots(mother)) {
          const double r = child_ratio(x);
          if (!(r > 0.0))
            throw Error(Errc::negative_gap, "non-positive ratio " + std::to_string(r) + " at " + to_string(x));
          sum += r;
          lengths_[x] = r * base;
          if (!x.is_gap()) next.push_back(x.word);
        }
        if (std::abs(sum - 1.0) > 1e-12)
          throw Error(Errc::ratio_sum_mismatch, "children of \"" + to_string(mother) + "\" sum to " + std::to_string(sum));
      }
      level = std::move(next);
    }
  }

  SftSystem sys_;
  GapLayout layout_;
  RatioFn ratio_;
  std::size_t context_;
  double delta_;
  double pressure_;
  std::size_t depth_;
  std::map<Segment, double> lengths_;
};

inline TrainTrackRealization lengths_from_ratio(const SftSystem& sys, const GapLayout& layout, RatioFn ratio,
                                                std::size_t context_depth, std::size_t depth, double delta = 1.0,
                                                double pressure = 0.0) {
  return TrainTrackRealization(sys, layout, std::move(ratio), context_depth, delta, pressure, depth);
}

/// Every child ratio is fixed by the child's symbol; gaps share what is left
/// equally.
inline TrainTrackRealization affine_realization(const SftSystem& sys, const GapLayout& layout,
                                                std::vector<double> ratios, std::size_t depth, double delta = 1.0,
                                                double pressure = 0.0) {
  RatioFn r = [layout, ratios](const Segment& x) {
    if (!x.is_gap()) return ratios.at(static_cast<std::size_t>(x.word.deepest()));
    const Word m = x.mother();
    double used = 0.0;
    for (const auto& c : layout.cylinders(m)) used += ratios.at(static_cast<std::size_t>(c.word.deepest()));
    return (1.0 - used) / static_cast<double>(layout.of(m).gap_count());
  };
  return TrainTrackRealization(sys, layout, std::move(r), 1, delta, pressure, depth);
}

/// Multiplies every cylinder ratio by t; each mother's gaps absorb the
/// difference in proportion to their original ratios.
inline TrainTrackRealization rescale_cylinders(const TrainTrackRealization& tt, double t) {
  auto base = std::make_shared<TrainTrackRealization>(tt);
  RatioFn r = [base, t](const Segment& x) {
    if (!x.is_gap()) return t * base->child_ratio(x);
    const Word m = x.mother();
    const auto& layout = base->layout();
    double cyl = 0.0, gaps = 0.0;
    for (const auto& c : layout.cylinders(m)) cyl += base->child_ratio(c);
    for (const auto& g : layout.gaps(m)) gaps += base->child_ratio(g);
    return base->child_ratio(x) / gaps * (1.0 - t * cyl);
  };
  return TrainTrackRealization(tt.system(), tt.layout(), std::move(r), tt.context_depth(), tt.delta(), tt.pressure(),
                               tt.depth());
}

// ---- pressure and dimension -------------------------------------------------

/// log of the spectral radius of the context-block transfer matrix weighted
/// by (child ratio)^delta. Gaps do not contribute.
inline double pressure_of(const TrainTrackRealization& tt, double delta) {
  const auto& sys = tt.system();
  const std::size_t c = tt.context_depth();
  const auto blocks = enumerate_cylinders(sys, c, tt.side());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < blocks.size(); ++i) index[blocks[i]] = i;
  Matrix weights(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int b : sys.extensions(blocks[i])) {
      const Word kid = child(blocks[i], b);
      weights(i, index.at(deep_part(kid, c))) += std::pow(tt.child_ratio(Segment::cylinder(kid)), delta);
    }
  }
  return std::log(spectral_radius(weights));
}

/// Growth rates log(Z_{n+1}/Z_n), Z_n = sum over n-cylinders of |C|^delta, n < depth.
inline std::vector<double> pressure_partial_sums(const TrainTrackRealization& tt, double delta, std::size_t depth) {
  std::vector<double> z;
  for (std::size_t n = 1; n <= depth; ++n) {
    double total = 0.0;
    for (const auto& w : enumerate_cylinders(tt.system(), n, tt.side())) total += std::pow(tt.length(w), delta);
    z.push_back(total);
  }
  std::vector<double> rates;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) rates.push_back(std::log(z[i + 1] / z[i]));
  return rates;
}

struct DimensionReport {
  double delta = 0.0;
  double pressure_residual = 0.0;
  std::size_t iterations = 0;
};

/// Root of delta -> pressure_of(tt, delta) on (0, 1] by bisection. Stops once
/// |P| <= pressure_tol, or the bracket is narrower than delta_tol * 1e-4.
inline DimensionReport hausdorff_dimension(const TrainTrackRealization& tt, double pressure_tol = 1e-12,
                                           double delta_tol = 1e-10, std::size_t max_iter = 200) {
  const double at_one = pressure_of(tt, 1.0);
  if (std::abs(at_one) <= pressure_tol) return DimensionReport{1.0, std::abs(at_one), 0};
  if (at_one > 0.0) throw Error(Errc::no_root, "pressure at delta = 1 is positive");
  double lo = 1e-9;
  double hi = 1.0;
  if (!(pressure_of(tt, lo) > 0.0)) throw Error(Errc::no_root, "pressure does not change sign on (0, 1]");
  DimensionReport report;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double p = pressure_of(tt, mid);
    report = DimensionReport{mid, std::abs(p), it};
    if (std::abs(p) <= pressure_tol || hi - lo <= delta_tol * 1e-4) return report;
    (p > 0.0 ? lo : hi) = mid;
  }
  return report;
}

/// min and max over n-cylinders (n <= depth) of nu(I) / (|I|^delta e^{-nP}).
inline std::pair<double, double> natural_measure_check(const TrainTrackRealization& tt, const GibbsTable& g,
                                                       double delta, double pressure, std::size_t depth) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t n = 1; n <= depth; ++n) {
    for (const auto& w : enumerate_cylinders(tt.system(), n, tt.side())) {
      const double q = g.measure(w) / (std::pow(tt.length(w), delta) * std::exp(-static_cast<double>(n) * pressure));
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
  }
  return {lo, hi};
}

// ---- periodic orbits ----------------------------------------------------------

/// Cylinder of depth n containing the periodic point whose itinerary repeats
/// `cycle` with x_0 = cycle[0].
inline Word orbit_cylinder(std::span<const int> cycle, std::size_t n, Side side) {
  const std::size_t p = cycle.size();
  Word w{side, Symbols(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (side == Side::u) w.symbols[i] = cycle[i % p];
    else w.symbols[n - 1 - i] = cycle[(p - i % p) % p];  // x_{-i}
  }
  return w;
}

/// Number of periods after which every factor of an orbit product is read
/// at stabilized depth.
inline std::size_t stabilized_periods(std::size_t context, std::size_t period) { return context / period + 2; }

/// Expansion eigenvalue |I_0|/|I_1| of the train-track map at a periodic
/// point, read at stabilized depth.
inline double eigenvalue(const TrainTrackRealization& tt, std::span<const int> cycle) {
  const std::size_t p = cycle.size();
  const std::size_t n = stabilized_periods(tt.context_depth(), p) * p + 1;
  const Word deep = orbit_cylinder(cycle, n + p, tt.side());
  double product = 1.0;
  Word w = deep;
  for (std::size_t j = 0; j < p; ++j) {
    product *= tt.child_ratio(Segment::cylinder(w));
    w = parent(w);
  }
  return 1.0 / product;
}
inline double eigenvalue(const TrainTrackRealization& tt, const PeriodicOrbit& o) { return eigenvalue(tt, o.word); }

/// (nu(I_0)/nu(I_1))^{1/delta} e^{-pP/delta}, the eigenvalue predicted by
/// the measure for a realization with exponent delta and pressure P.
inline double eigenvalue_via_measure(const GibbsTable& g, double delta, double pressure, std::span<const int> cycle,
                                     Side side = Side::u) {
  const std::size_t p = cycle.size();
  const std::size_t n = stabilized_periods(g.range(), p) * p + 1;
  const double rho = g.measure(orbit_cylinder(cycle, n, side)) / g.measure(orbit_cylinder(cycle, n + p, side));
  return std::pow(rho, 1.0 / delta) * std::exp(-static_cast<double>(p) * pressure / delta);
}
inline double eigenvalue_via_measure(const GibbsTable& g, double delta, double pressure, const PeriodicOrbit& o,
                                     Side side = Side::u) {
  return eigenvalue_via_measure(g, delta, pressure, o.word, side);
}

struct EigenvalueReport {
  PeriodicOrbit orbit;
  double lambda_ratio = 0.0;
  double lambda_measure = 0.0;
  double residual = 0.0;
};

inline std::vector<EigenvalueReport> eigenvalue_reports(const TrainTrackRealization& tt, const GibbsTable& g,
                                                        std::size_t p_max) {
  std::vector<EigenvalueReport> out;
  for (const auto& o : periodic_orbits(tt.system(), p_max)) {
    const double a = eigenvalue(tt, o);
    const double b = eigenvalue_via_measure(g, tt.delta(), tt.pressure(), o, tt.side());
    out.push_back(EigenvalueReport{o, a, b, std::abs(std::log(a) - std::log(b))});
  }
  return out;
}

/// max over orbits of least period <= p_max of
/// |log(lambda_s^{-delta_s} e^{pP_s}) - log(lambda_u^{delta_u} e^{pP_u})|,
/// where lambda_s = 1/eigenvalue(tts) is the contraction along the stable side.
inline double livsic_sinai_check(const TrainTrackRealization& tts, const TrainTrackRealization& ttu,
                                 const GibbsTable& g, double delta_s, double delta_u, double pressure_s,
                                 double pressure_u, std::size_t p_max) {
  if (tts.side() != Side::s || ttu.side() != Side::u || !same_shift(tts.system(), ttu.system()) ||
      !same_shift(tts.system(), g.system()))
    throw Error(Errc::mismatched_systems, "need an s-side and a u-side realization over the measure's shift");
  double worst = 0.0;
  for (const auto& o : periodic_orbits(g.system(), p_max)) {
    const double p = static_cast<double>(o.period);
    const double lambda_s = 1.0 / eigenvalue(tts, o);
    const double lambda_u = eigenvalue(ttu, o);
    const double lhs = -delta_s * std::log(lambda_s) + p * pressure_s;
    const double rhs = delta_u * std::log(lambda_u) + p * pressure_u;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

// ---- measure realizations and duality ---------------------------------------

/// No-gap realization (delta = 1, P = 0) whose ratios are the measure ratios
/// of `side`: nu(C)/nu(mC) below the root, and primary lengths chained
/// through dual ratios of neighbouring primaries.
inline TrainTrackRealization measure_realization(const GibbsTable& g, Side side, const GapLayout& layout,
                                                 std::size_t depth) {
  if (layout.has_gaps()) throw Error(Errc::gap_on_dual_side, "measure realizations need a no-gap layout");
  auto table = std::make_shared<const GibbsTable>(g);
  std::map<int, double> primary;
  {
    const auto& order = layout.root.children;
    std::vector<double> w{1.0};
    for (std::size_t i = 1; i < order.size(); ++i)
      w.push_back(w.back() * dual_measure_ratio(g, Word{side, {order[i]}}, Word{side, {order[i - 1]}}, g.range()));
    double total = 0.0;
    for (double x : w) total += x;
    for (std::size_t i = 0; i < order.size(); ++i) primary[order[i]] = w[i] / total;
  }
  RatioFn r = [table, primary](const Segment& x) {
    if (x.depth() == 1) return primary.at(x.word.pivot());
    return table->measure(x.word) / table->measure(x.mother());
  };
  return TrainTrackRealization(g.system(), layout, std::move(r), g.range() - 1, 1.0, 0.0, depth);
}

/// Realization of the dual side whose ratio function is the dual measure
/// ratio of tt's side. The dual layout must have no gaps.
inline TrainTrackRealization dual_pair(const GibbsTable& g, const TrainTrackRealization& tt,
                                       const GapLayout& dual_layout) {
  if (dual_layout.side != dual(tt.side())) throw Error(Errc::mismatched_systems, "dual layout is on the wrong side");
  if (dual_layout.has_gaps()) throw Error(Errc::gap_on_dual_side, "the dual train-track has gaps");
  return measure_realization(g, dual_layout.side, dual_layout, tt.depth());
}

}  // namespace livsic
