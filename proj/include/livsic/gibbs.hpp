#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "livsic/error.hpp"
#include "livsic/linalg.hpp"
#include "livsic/sft.hpp"
#include "livsic/word.hpp"

namespace livsic {

/// Locally constant potential: one value per admissible word of length `range`.
struct Potential {
  std::size_t range = 2;
  std::map<Symbols, double> values;
  std::string tag;

  friend bool operator==(const Potential&, const Potential&) = default;
};

inline Potential constant_potential(const SftSystem& sys, std::size_t range, double value, std::string tag = "constant") {
  Potential phi{range, {}, std::move(tag)};
  for (const auto& w : enumerate_cylinders(sys, range, Side::u)) phi.values[w.symbols] = value;
  return phi;
}

/// Range-2 potential log P[a][b] of a Markov chain with row-stochastic P.
inline Potential markov_potential(const SftSystem& sys, const std::vector<std::vector<double>>& transition,
                                  std::string tag = "markov") {
  Potential phi{2, {}, std::move(tag)};
  for (const auto& w : enumerate_cylinders(sys, 2, Side::u))
    phi.values[w.symbols] = std::log(transition.at(static_cast<std::size_t>(w.symbols[0]))
                                         .at(static_cast<std::size_t>(w.symbols[1])));
  return phi;
}

/// Equilibrium state of a locally constant potential, with exact cylinder
/// measures at every depth.
///
/// The potential is recoded on (m-1)-blocks: M[b][b'] = exp(phi(b + last of b'))
/// when b' continues b. With Perron data lambda, left l and right r (l.r = 1),
///   nu(w) = l[first block] * prod exp(phi(window)) / lambda * r[last block]
/// for |w| >= m-1; shorter words are summed over their right extensions.
class GibbsTable {
 public:
  GibbsTable(SftSystem sys, Potential phi, bool normalize = false) : sys_(std::move(sys)), phi_(std::move(phi)) {
    if (phi_.range < 2) throw Error(Errc::parse_error, "potential range must be at least 2");
    const std::size_t m = phi_.range;
    block_len_ = m - 1;

    for (const auto& w : enumerate_cylinders(sys_, m, Side::u)) {
      auto it = phi_.values.find(w.symbols);
      if (it == phi_.values.end() || !std::isfinite(it->second))
        throw Error(Errc::parse_error, "potential has no finite value for word " + to_string(w));
    }

    std::size_t codes = 1;
    for (std::size_t i = 0; i < block_len_; ++i) codes *= sys_.k;
    block_index_.assign(codes, npos);
    for (const auto& b : enumerate_cylinders(sys_, block_len_, Side::u)) {
      block_index_[code(b.symbols)] = blocks_.size();
      blocks_.push_back(b.symbols);
    }

    Matrix transfer(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (int c : sys_.extensions(Word{Side::u, blocks_[i]})) {
        Symbols window = blocks_[i];
        window.push_back(c);
        Symbols next(window.begin() + 1, window.end());
        transfer(i, block_index_[code(next)]) = std::exp(phi_.values.at(window));
      }
    }
    const auto right = perron_vector(transfer);
    const auto left = perron_vector(transfer.transposed());
    lambda_ = right.eigenvalue;
    pressure_ = std::log(lambda_);
    right_ = right.vector;
    left_ = left.vector;
    double dot = 0.0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) dot += left_[i] * right_[i];
    for (double& x : left_) x /= dot;

    std::size_t window_codes = codes * sys_.k;
    step_weight_.assign(window_codes, 0.0);
    for (const auto& [w, value] : phi_.values)
      if (w.size() == m && sys_.admissible(w)) step_weight_[code(w)] = std::exp(value) / lambda_;

    if (normalize) {
      for (auto& [w, value] : phi_.values) value -= pressure_;
      pressure_ = 0.0;
    }
  }

  [[nodiscard]] const SftSystem& system() const { return sys_; }
  [[nodiscard]] const Potential& potential() const { return phi_; }
  [[nodiscard]] std::size_t range() const { return phi_.range; }
  [[nodiscard]] double pressure() const { return pressure_; }

  /// Stationary distribution of (m-1)-blocks, in enumerate_cylinders order.
  [[nodiscard]] std::vector<double> block_distribution() const {
    std::vector<double> pi(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) pi[i] = left_[i] * right_[i];
    return pi;
  }

  /// Two-sided cylinder measure of a word in time order (0 if inadmissible).
  [[nodiscard]] double measure(std::span<const int> w) const {
    if (w.empty()) return 1.0;
    if (!sys_.admissible(Symbols(w.begin(), w.end()))) return 0.0;
    return measure_admissible(w);
  }
  [[nodiscard]] double measure(const Word& w) const { return measure(std::span<const int>(w.symbols)); }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  [[nodiscard]] std::size_t code(std::span<const int> w) const {
    std::size_t c = 0;
    for (int s : w) c = c * sys_.k + static_cast<std::size_t>(s);
    return c;
  }

  [[nodiscard]] double measure_admissible(std::span<const int> w) const {
    const std::size_t n = w.size();
    if (n < block_len_) {
      Symbols longer(w.begin(), w.end());
      double total = 0.0;
      for (int c : sys_.extensions(Word{Side::u, longer})) {
        longer.push_back(c);
        total += measure_admissible(longer);
        longer.pop_back();
      }
      return total;
    }
    double value = left_[block_index_[code(w.first(block_len_))]];
    for (std::size_t i = 0; i + phi_.range <= n; ++i) value *= step_weight_[code(w.subspan(i, phi_.range))];
    return value * right_[block_index_[code(w.last(block_len_))]];
  }

  SftSystem sys_;
  Potential phi_;
  std::size_t block_len_ = 1;
  double lambda_ = 1.0;
  double pressure_ = 0.0;
  std::vector<Symbols> blocks_;
  std::vector<std::size_t> block_index_;
  std::vector<double> left_, right_;
  std::vector<double> step_weight_;
};

inline GibbsTable gibbs_from_potential(const SftSystem& sys, const Potential& phi, bool normalize = false) {
  return GibbsTable(sys, phi, normalize);
}

// ---- scaling functions ------------------------------------------------------

/// Measure scaling function: u-side nu(w_0..w_n)/nu(w_1..w_n), s-side
/// nu(w_{-n}..w_0)/nu(w_{-n}..w_{-1}). Exact once the word has length >= m.
inline double measure_scaling(const GibbsTable& g, const Word& eta) {
  if (eta.depth() < g.range())
    throw Error(Errc::word_too_short, "scaling needs a word of length >= " + std::to_string(g.range()));
  std::span<const int> all(eta.symbols);
  const auto rest = eta.side == Side::u ? all.subspan(1) : all.first(all.size() - 1);
  return g.measure(all) / g.measure(rest);
}

/// Joins a leaf (dual-side word) with a cylinder sharing its pivot into one
/// two-sided word in time order.
inline Symbols join(const Word& leaf, const Word& cyl) {
  if (leaf.side != dual(cyl.side) || leaf.is_root() || cyl.is_root() || leaf.pivot() != cyl.pivot())
    throw Error(Errc::inadmissible_pair, "leaf " + to_string(leaf) + " and cylinder " + to_string(cyl) +
                                             " do not share a pivot");
  Symbols out;
  if (cyl.side == Side::u) {
    out = leaf.symbols;
    out.insert(out.end(), cyl.symbols.begin() + 1, cyl.symbols.end());
  } else {
    out = cyl.symbols;
    out.insert(out.end(), leaf.symbols.begin() + 1, leaf.symbols.end());
  }
  return out;
}

/// Extended measure scaling: the product of n-1 scaling values along the
/// mother chain of C, read on the dual side through the leaf. Equals the
/// conditional measure of the leaf segment leaf.C given the leaf.
inline double extended_scaling(const GibbsTable& g, const Word& leaf, const Word& cyl) {
  const Symbols joined = join(leaf, cyl);
  if (!g.system().admissible(joined)) throw Error(Errc::inadmissible_pair, "joined word is not admissible");
  if (leaf.depth() + 1 < g.range())
    throw Error(Errc::word_too_short, "leaf truncation must be at least range - 1");
  const std::size_t n = cyl.depth();
  double rho = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    Word eta{leaf.side, {}};
    if (cyl.side == Side::u) {
      // leaf followed by C_1..C_k, scaled on the past side
      eta.symbols.assign(joined.begin(), joined.begin() + static_cast<std::ptrdiff_t>(leaf.depth() + k));
    } else {
      // c_{-k}..c_0 followed by the rest of the leaf, scaled on the future side
      eta.symbols.assign(joined.begin() + static_cast<std::ptrdiff_t>(n - 1 - k), joined.end());
    }
    rho *= measure_scaling(g, eta);
  }
  return rho;
}

/// Lexicographically smallest admissible deepening of a leaf to length `len`.
inline Word deepen_leaf(const SftSystem& sys, Word leaf, std::size_t len) {
  while (leaf.depth() < len) {
    const auto ext = sys.extensions(leaf);
    leaf = child(leaf, ext.front());
  }
  return leaf;
}

/// |nu(C) - sum over depth-d leaf cylinders xi through the pivot of
/// rho_{xi*}(C) nu(xi)|, with xi* the smallest admissible deepening of xi.
inline double ratio_decomposition_residual(const GibbsTable& g, const Word& cyl, std::size_t leaf_depth) {
  const auto& sys = g.system();
  const Side leaf_side = dual(cyl.side);
  double total = 0.0;
  for (const auto& xi : enumerate_cylinders(sys, leaf_depth, leaf_side)) {
    if (xi.pivot() != cyl.pivot()) continue;
    const Word rep = deepen_leaf(sys, xi, std::max(leaf_depth, g.range() - 1));
    if (!sys.admissible(join(rep, cyl))) continue;
    total += extended_scaling(g, rep, cyl) * g.measure(xi);
  }
  return std::abs(g.measure(cyl) - total);
}

// ---- solenoid and ratio functions -------------------------------------------

/// Number of symbols shared at the deep end of two equal-length words.
inline std::size_t common_deep_depth(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.depth(), b.depth());
  std::size_t k = 0;
  if (a.side == Side::u) {
    while (k < n && a.symbols[a.depth() - 1 - k] == b.symbols[b.depth() - 1 - k]) ++k;
  } else {
    while (k < n && a.symbols[k] == b.symbols[k]) ++k;
  }
  return k;
}

/// Measure solenoid value for two primary `side`-leaf segments labelled by
/// dual-side words psi and xi that agree deep down and differ near the pivot:
/// nu(psi)/nu(xi), which equals rho_zeta(C)/rho_zeta(D) for the cylinders C, D
/// read off below the common deep context zeta.
inline double measure_solenoid(const GibbsTable& g, const Word& psi, const Word& xi, Side side) {
  if (psi.side != dual(side) || xi.side != dual(side) || psi.depth() != xi.depth())
    throw Error(Errc::not_in_domain, "solenoid pairs are equal-length words on the dual side");
  const auto& sys = g.system();
  if (!sys.admissible(psi) || !sys.admissible(xi)) throw Error(Errc::not_in_domain, "inadmissible word");
  const std::size_t shared = common_deep_depth(psi, xi);
  if (shared == psi.depth()) throw Error(Errc::not_in_domain, "the two leaves coincide");
  if (shared == 0 || shared + 1 < g.range())
    throw Error(Errc::not_in_domain, "leaves must share a deep context of at least max(1, m-1) symbols");
  return g.measure(psi) / g.measure(xi);
}

/// Measure ratio of two segments in a common primary cylinder. A gap in the
/// numerator gives 0, a gap in the denominator gives +infinity.
inline double measure_ratio(const GibbsTable& g, const Segment& a, const Segment& b) {
  if (a.side() != b.side()) throw Error(Errc::no_common_leaf, "segments on different sides");
  if (a.depth() == 0 || b.depth() == 0 || a.word.pivot() != b.word.pivot())
    throw Error(Errc::no_common_leaf, to_string(a) + " and " + to_string(b) + " lie in different primary cylinders");
  if (a.is_gap() && b.is_gap()) throw Error(Errc::not_in_domain, "ratio of two gaps is undefined for measures");
  if (a.is_gap()) return 0.0;
  if (b.is_gap()) return std::numeric_limits<double>::infinity();
  return g.measure(a.word) / g.measure(b.word);
}

/// Dual measure ratio of two words on one side through thin strips beyond the
/// pivot: the strips run over every continuation of length m_dual - 1 that
/// is admissible after both pivots.
inline double dual_measure_ratio(const GibbsTable& g, const Word& a, const Word& b, std::size_t m_dual) {
  if (a.side != b.side || a.is_root() || b.is_root()) throw Error(Errc::no_common_leaf, "need two words on one side");
  const auto& sys = g.system();
  if (!sys.admissible(a) || !sys.admissible(b)) throw Error(Errc::no_common_leaf, "inadmissible word");
  const std::size_t strip = m_dual > 0 ? m_dual - 1 : 0;
  const Side strip_side = dual(a.side);
  if (strip == 0) return g.measure(a) / g.measure(b);
  double num = 0.0, den = 0.0;
  bool any = false;
  for (const auto& z : enumerate_cylinders(sys, strip, strip_side)) {
    // The strip through each word: its pivot followed (u) or preceded (s) by z.
    Word za = z, zb = z;
    if (strip_side == Side::u) {
      za.symbols.insert(za.symbols.begin(), a.pivot());
      zb.symbols.insert(zb.symbols.begin(), b.pivot());
    } else {
      za.symbols.push_back(a.pivot());
      zb.symbols.push_back(b.pivot());
    }
    if (!sys.admissible(za) || !sys.admissible(zb)) continue;
    any = true;
    num += g.measure(join(za, a));
    den += g.measure(join(zb, b));
  }
  if (!any) throw Error(Errc::no_common_leaf, to_string(a) + " and " + to_string(b) + " share no strip");
  return num / den;
}

/// Rebuilds a Gibbs table from one side's measure ratio data alone:
/// `ratio(w)` is rho(w : mother(w)) for words of length m on `side`.
template <class RatioFn>
GibbsTable gibbs_from_ratio(const SftSystem& sys, Side side, std::size_t range, RatioFn&& ratio) {
  Potential phi{range, {}, "from-ratio"};
  for (const auto& w : enumerate_cylinders(sys, range, side)) phi.values[w.symbols] = std::log(ratio(w));
  return GibbsTable(sys, std::move(phi));
}

}  // namespace livsic
