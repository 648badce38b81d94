#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "livsic/scenario.hpp"
#include "oracles/frozen.hpp"
#include "support.hpp"

using namespace livsic;
using Catch::Matchers::WithinAbs;

TEST_CASE("built-in scenarios") {
  CHECK(builtin_names() == std::vector<std::string>{"horseshoe", "cantor-third", "golden-anosov", "da-attractor-toy"});
  for (const auto& name : builtin_names()) {
    INFO(name);
    const auto sc = builtin(name);
    CHECK(sc.name == name);
    CHECK(sc.sys().primitivity_exponent >= 1);
    CHECK_FALSE(sc.sides.empty());
  }
  try {
    builtin("nope");
    FAIL("unknown builtin accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_builtin);
  }
  CHECK(same_shift(builtin("golden-anosov").sys(), support::golden()));
  CHECK_THAT(builtin("golden-anosov").gibbs().pressure(), WithinAbs(oracle::golden_pressure, 1e-14));
  CHECK_THAT(builtin("horseshoe").gibbs().pressure(), WithinAbs(std::log(2.0), 1e-14));
}

TEST_CASE("potential shorthands") {
  const auto sys = support::full();
  const auto c = potential_from_json(parse_json_text(R"({"constant": -1.5, "range": 2})"), sys);
  CHECK(c.range == 2);
  CHECK(c.values.size() == 4);
  for (const auto& [w, v] : c.values) CHECK(v == -1.5);

  const auto m = potential_from_json(parse_json_text(R"({"markov": [[0.7, 0.3], [0.4, 0.6]], "tag": "m"})"), sys);
  CHECK(m.tag == "m");
  const auto g = gibbs_from_potential(sys, m);
  CHECK_THAT(g.pressure(), WithinAbs(0.0, 1e-13));
  for (const auto& [w, v] : oracle::markov73_measures) CHECK_THAT(g.measure(support::u(w)), WithinAbs(v, 1e-13));

  for (const char* bad : {R"({"markov": [[0.7, 0.3]]})", R"({"markov": [[0.7, 0.3], [0.4]]})",
                          R"({"markov": [[0.7, 0.3], [0.0, 1.0]]})", R"({"constant": 1.0})",
                          R"({"range": 1, "values": {"0": 0.0}})"})
    CHECK_THROWS_AS(potential_from_json(parse_json_text(bad), sys), Error);
  // a forbidden transition may carry a zero
  CHECK_NOTHROW(potential_from_json(parse_json_text(R"({"markov": [[0.5, 0.5], [1.0, 0.0]]})"), support::golden()));
}

TEST_CASE("side models") {
  const auto sys = support::full();
  const auto a = side_model_from_json(parse_json_text(R"({"model": "affine", "ratios": [0.25, 0.5], "delta": 0.5})"), sys);
  CHECK(a.kind == SideModelKind::affine);
  CHECK(a.delta == 0.5);
  CHECK(a.pressure == 0.0);
  CHECK_THROWS_AS(side_model_from_json(parse_json_text(R"({"model": "affine", "ratios": [0.25]})"), sys), Error);
  CHECK_THROWS_AS(side_model_from_json(parse_json_text(R"({"model": "spline"})"), sys), Error);
  CHECK_THROWS_AS(side_model_from_json(parse_json_text(R"({"delta": 1})"), sys), Error);

  const auto sc = builtin("cantor-third");
  CHECK_THROWS_AS(Scenario{}.model(Side::u), Error);
  CHECK(sc.has_side(Side::u));
}

TEST_CASE("realize each side") {
  for (const auto& name : builtin_names()) {
    const auto sc = builtin(name);
    const auto g = sc.gibbs();
    for (const auto& [side, model] : sc.sides) {
      INFO(name << " " << to_string(side));
      const auto tt = realize(sc, side, g, 6);
      CHECK(tt.side() == side);
      CHECK(tt.depth() == 6);
      CHECK(tt.delta() == model.delta);
      for (const auto& w : enumerate_cylinders(sc.sys(), 5, side)) {
        double sum = 0.0;
        for (const auto& x : tt.layout().slots(w)) sum += tt.length(x);
        CHECK_THAT(sum, WithinAbs(tt.length(w), 1e-14));
      }
    }
  }
  const auto third = builtin("cantor-third");
  const auto tt = realize(third, Side::u, third.gibbs(), 4);
  CHECK_THAT(tt.length(support::u("0101")), WithinAbs(1.0 / 81.0, 1e-16));
}
