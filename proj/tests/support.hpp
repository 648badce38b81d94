#pragma once

#include <string>

#include "livsic/gibbs.hpp"
#include "livsic/layout.hpp"
#include "livsic/sft.hpp"
#include "livsic/word.hpp"

namespace support {

inline livsic::SftSystem full() { return livsic::build_sft(2, {{1, 1}, {1, 1}}); }
inline livsic::SftSystem golden() { return livsic::build_sft(2, {{1, 1}, {1, 0}}); }

inline livsic::GibbsTable bernoulli() {
  auto sys = full();
  return livsic::gibbs_from_potential(sys, livsic::constant_potential(sys, 2, 0.0));
}
inline livsic::GibbsTable markov(double p00, double p01, double p10, double p11) {
  auto sys = full();
  return livsic::gibbs_from_potential(sys, livsic::markov_potential(sys, {{p00, p01}, {p10, p11}}));
}
inline livsic::GibbsTable markov73() { return markov(.7, .3, .4, .6); }
inline livsic::GibbsTable parry() {
  auto sys = golden();
  return livsic::gibbs_from_potential(sys, livsic::constant_potential(sys, 2, 0.0));
}

inline livsic::Word u(const std::string& t) { return livsic::parse_word(t, livsic::Side::u); }
inline livsic::Word s(const std::string& t) { return livsic::parse_word(t, livsic::Side::s); }
inline livsic::Segment useg(const std::string& t) { return livsic::parse_segment(t, livsic::Side::u); }
inline livsic::Segment sseg(const std::string& t) { return livsic::parse_segment(t, livsic::Side::s); }

}  // namespace support

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace support {

/// Dualizes g's past-side ratio data into a fresh Gibbs table, then compares
/// the dual ratio of `count` random future-word pairs under both tables.
inline std::vector<double> involution_residuals(const livsic::GibbsTable& g, unsigned seed, std::size_t count) {
  using namespace livsic;
  const auto& sys = g.system();
  const std::size_t m = g.range();
  const auto back = gibbs_from_ratio(sys, Side::s, m,
                                     [&](const Word& w) { return dual_measure_ratio(g, w, mother(w, 1), m); });
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> depth(1, 5);
  std::vector<double> out;
  while (out.size() < count) {
    const auto as = enumerate_cylinders(sys, depth(rng), Side::u);
    const auto bs = enumerate_cylinders(sys, depth(rng), Side::u);
    const auto& a = as[std::uniform_int_distribution<std::size_t>(0, as.size() - 1)(rng)];
    const auto& b = bs[std::uniform_int_distribution<std::size_t>(0, bs.size() - 1)(rng)];
    try {
      const double original = dual_measure_ratio(g, a, b, m);
      const double twice = dual_measure_ratio(back, a, b, m);
      out.push_back(std::abs(std::log(twice) - std::log(original)));
    } catch (const Error& e) {
      if (e.code() != Errc::no_common_leaf) throw;
    }
  }
  return out;
}

}  // namespace support

#include "livsic/cocycle_gap.hpp"

namespace support {

inline const double bowen = std::log(2.0) / std::log(3.0);

/// A synthesized realization together with the data it was built from.
struct Synthesized {
  std::string name;
  livsic::GibbsTable g;
  double delta;
  livsic::CocycleGapPair pair;
  livsic::GapLayout layout;
};

inline livsic::MeasureLengthCocycle da_kappa() {
  using livsic::Side;
  return {Side::s, 2, {{s("00"), 1.0}, {s("01"), 1.1}, {s("10"), 1.1}, {s("11"), 1.0}}};
}

/// Three (nu, delta, P = 0) configurations: Bernoulli at the middle-third
/// exponent, the DA toy's s-side and a Markov chain with a depth-1 kappa.
inline std::vector<Synthesized> synthesized_configs() {
  using namespace livsic;
  const auto sys = full();
  return {
      {"bernoulli_bowen", bernoulli(), bowen, {GapRatioFn::unit(Side::u), MeasureLengthCocycle::trivial(Side::u)},
       full_gap_layout(sys, Side::u)},
      {"markov64_08", markov(.6, .4, .4, .6), 0.8, {GapRatioFn::unit(Side::s), da_kappa()},
       full_gap_layout(sys, Side::s)},
      {"markov73_07", markov73(), 0.7,
       {GapRatioFn::unit(Side::u), MeasureLengthCocycle{Side::u, 1, {{u("0"), 1.0}, {u("1"), 1.2}}}},
       full_gap_layout(sys, Side::u)},
  };
}

inline livsic::TrainTrackRealization realize(const Synthesized& c, std::size_t depth) {
  return livsic::synthesize_ratio(c.g, c.delta, 0.0, c.pair, c.layout, depth);
}

}  // namespace support
