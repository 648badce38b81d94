#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "livsic/cocycle_gap.hpp"
#include "livsic/scenario.hpp"
#include "oracles/frozen.hpp"
#include "support.hpp"

using namespace livsic;
using Catch::Approx;
using support::s;
using support::u;
using support::useg;

namespace {

CocycleGapPair trivial(Side side) { return {GapRatioFn::unit(side), MeasureLengthCocycle::trivial(side)}; }

}  // namespace

TEST_CASE("cocycle admissibility") {
  const auto b = support::bernoulli();
  const auto half = validate_cocycle(MeasureLengthCocycle::trivial(Side::u), b, 0.5, 0.0);
  CHECK(half.admissible);
  CHECK(half.margin == Approx(0.5).epsilon(1e-14));

  const auto one = validate_cocycle(MeasureLengthCocycle::trivial(Side::u), b, 1.0, 0.0);
  CHECK_FALSE(one.admissible);
  CHECK(std::abs(one.margin) < 1e-15);

  for (double delta : {0.3, 0.7, 0.99})
    CHECK(validate_cocycle(MeasureLengthCocycle::trivial(Side::s), support::markov73(), delta, 0.0).admissible);

  const auto da = validate_cocycle(support::da_kappa(), support::markov(.6, .4, .4, .6), 0.8, 0.0);
  CHECK(da.admissible);
  CHECK(da.margin > 0.0);
  CHECK(da.margin < 1.0);
  // Positive pressure eats the margin.
  CHECK_FALSE(validate_cocycle(support::da_kappa(), support::markov(.6, .4, .4, .6), 0.8, 0.5).admissible);
}

TEST_CASE("cocycle telescopes around periodic orbits") {
  const auto kappa = support::da_kappa();
  const auto sys = support::full();
  for (const auto& o : periodic_orbits(sys, 6)) {
    const std::size_t p = o.period;
    Word w = orbit_cylinder(o.word, 4 * p + 4, Side::s);
    double product = 1.0;
    for (std::size_t j = 0; j < p; ++j) {
      product *= kappa(w);
      w = parent(w);
    }
    CHECK(std::abs(product - 1.0) < 1e-12);
  }
  CHECK(kappa.kappa_min() == 1.0);
  CHECK(kappa.log_kappa_sup() == Approx(std::log(1.1)).epsilon(1e-14));
  CHECK(MeasureLengthCocycle::trivial(Side::u)(u("0101")) == 1.0);
  MeasureLengthCocycle partial{Side::u, 1, {{u("0"), 2.0}}};
  CHECK_THROWS_AS(partial(u("01")), Error);
}

TEST_CASE("gap ratio functions") {
  CHECK(validate_gap_ratio(GapRatioFn::unit(Side::u)).valid);

  // Four children, three gaps under the root.
  const auto g1 = useg("0|1"), g2 = useg("1|2"), g3 = useg("2|3");
  const double a = 2.0, b = 0.5, c = 3.0;
  GapRatioFn coboundary{Side::u, 1, {{{g1, g2}, a / b}, {{g2, g3}, b / c}, {{g1, g3}, a / c}}};
  CHECK(validate_gap_ratio(coboundary).valid);
  GapRatioFn broken{Side::u, 1, {{{g1, g2}, 2.0}, {{g2, g3}, 2.0}, {{g1, g3}, 5.0}}};
  const auto report = validate_gap_ratio(broken);
  CHECK_FALSE(report.valid);
  CHECK(report.triple_residual > 0.5);
  GapRatioFn lopsided{Side::u, 1, {{{g1, g2}, 2.0}, {{g2, g1}, 0.6}}};
  CHECK_FALSE(validate_gap_ratio(lopsided).valid);
  CHECK(coboundary(g2, g1) == Approx(b / a).epsilon(1e-15));
}

TEST_CASE("ratio synthesis") {
  const auto sys = support::full();
  const auto layout = full_gap_layout(sys, Side::u);
  const auto b = support::bernoulli();
  const auto third = synthesize_ratio(b, oracle::bowen_third, 0.0, trivial(Side::u), layout, 4);
  CHECK(third.child_ratio(useg("0")) == Approx(oracle::bernoulli_bowen_ratio).epsilon(1e-14));
  CHECK(third.child_ratio(useg("1")) == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(third.child_ratio(useg("0|1")) == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(third.child_ratio(useg("0110|0111")) == Approx(1.0 / 3.0).epsilon(1e-14));

  const auto quarter = synthesize_ratio(b, 0.5, 0.0, trivial(Side::u), layout, 4);
  CHECK(quarter.child_ratio(useg("01")) == Approx(0.25).epsilon(1e-14));
  CHECK(quarter.child_ratio(useg("00|01")) == Approx(0.5).epsilon(1e-14));

  const auto sys3 = build_sft(3, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const auto g3 = gibbs_from_potential(sys3, constant_potential(sys3, 2, 0.0));
  const auto two_gaps = synthesize_ratio(g3, 0.5, 0.0, trivial(Side::u), full_gap_layout(sys3, Side::u), 3);
  CHECK(two_gaps.child_ratio(useg("0|1")) == Approx(two_gaps.child_ratio(useg("1|2"))).epsilon(1e-14));
  CHECK(two_gaps.child_ratio(useg("0|1")) == Approx((1.0 - 3.0 / 9.0) / 2.0).epsilon(1e-14));

  // Unequal gamma splits the remainder in proportion.
  CocycleGapPair weighted{GapRatioFn{Side::u, 1, {}}, MeasureLengthCocycle::trivial(Side::u)};
  for (const char* m : {"", "0", "1", "2"})
    weighted.gamma.values[{useg(std::string(m) + "0|" + m + "1"), useg(std::string(m) + "1|" + m + "2")}] = 3.0;
  const auto tilted = synthesize_ratio(g3, 0.5, 0.0, weighted, full_gap_layout(sys3, Side::u), 2);
  CHECK(tilted.child_ratio(useg("0|1")) == Approx(3.0 * tilted.child_ratio(useg("1|2"))).epsilon(1e-13));

  try {
    synthesize_ratio(b, 1.0, 0.0, trivial(Side::u), layout, 4);
    FAIL("delta = 1 with gaps accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inadmissible_pair);
  }
  try {
    synthesize_ratio(b, 0.5, 0.0, trivial(Side::u), no_gap_layout(sys, Side::u), 4);
    FAIL("no-gap layout with short children accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inadmissible_pair);
  }
  CHECK_THROWS_AS(synthesize_ratio(b, 0.5, 0.0, trivial(Side::s), layout, 4), Error);

  for (const auto& c : support::synthesized_configs()) {
    INFO(c.name);
    const auto tt = support::realize(c, 8);
    double worst = 0.0;
    for (const auto& m : detail::mothers_to_depth(sys, c.layout.side, 7)) {
      double sum = 0.0;
      for (const auto& x : c.layout.slots(m)) sum += tt.child_ratio(x);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("cocycle-gap property") {
  const auto hs = builtin("horseshoe");
  const auto hg = hs.gibbs();
  CHECK(check_cocycle_gap_property(*hs.model(Side::u).pair, hs.sys().boundary, hg, support::bowen, 0.0,
                                   hs.system.layout(Side::u), 8)
            .empty());
  try {
    check_cocycle_gap_property(*hs.model(Side::u).pair, std::nullopt, hg, support::bowen, 0.0, hs.system.layout(Side::u), 8);
    FAIL("missing data accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_boundary_data);
  }

  const auto da = builtin("da-attractor-toy");
  const auto g = da.gibbs();
  const auto& model = da.model(Side::s);
  const auto layout = da.system.layout(Side::s);
  const auto rs = check_cocycle_gap_property(*model.pair, da.sys().boundary, g, model.delta, 0.0, layout, 8);
  CHECK(rs.size() > 20);
  CHECK(max_residual(rs) < 1e-10);

  for (const char* key : {"01", "10"}) {
    auto bent = *model.pair;
    bent.cocycle.kappa[s(key)] *= 1.1;
    CHECK(max_residual(check_cocycle_gap_property(bent, da.sys().boundary, g, model.delta, 0.0, layout, 8)) > 1e-3);
  }
}

TEST_CASE("cocycle-gap variants share a bounded class") {
  const auto sys = support::full();
  const auto base = support::synthesized_configs()[1];
  const auto reference = solenoid_from_realization(support::realize(base, 8));
  const std::vector<std::map<std::string, double>> variants{
      {{"01", 1.15}}, {{"00", 0.95}, {"11", 1.05}}, {{"01", 1.0}, {"10", 1.2}}};
  for (const auto& change : variants) {
    auto v = base;
    for (const auto& [k, val] : change) v.pair.cocycle.kappa[s(k)] = val;
    const auto margin = validate_cocycle(v.pair.cocycle, v.g, v.delta, 0.0);
    INFO("margin " << margin.margin);
    REQUIRE(margin.admissible);
    const auto r = bounded_equivalence(reference, solenoid_from_realization(support::realize(v, 8)), sys, 8);
    CHECK(r.bounded);
    CHECK(r.growth < 1e-6);
    CHECK(std::isfinite(r.bound));
  }
}
