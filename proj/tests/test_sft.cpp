#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles/frozen.hpp"
#include "support.hpp"

using namespace livsic;
using support::u;
using support::s;

TEST_CASE("build_sft primitivity exponent") {
  CHECK(support::full().primitivity_exponent == 1);
  CHECK(support::golden().primitivity_exponent == 2);
  try {
    build_sft(2, {{1, 0}, {0, 1}});
    FAIL("identity matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_primitive);
  }
  CHECK_THROWS_AS(build_sft(2, {{1, 2}, {1, 1}}), Error);
}

TEST_CASE("boundary words must be admissible") {
  BoundaryData data;
  data.matching.push_back({"bad", Side::u, support::useg("11"), support::useg("0"), {support::useg("0"), support::useg("1")}, 1});
  try {
    build_sft(2, {{1, 1}, {1, 0}}, data);
    FAIL("inadmissible boundary word accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inadmissible_boundary_word);
  }
}

TEST_CASE("enumerate_cylinders counts and order") {
  CHECK(enumerate_cylinders(support::full(), 3, Side::u).size() == 8);
  const auto g = support::golden();
  for (std::size_t n = 1; n <= oracle::golden_cylinder_counts.size(); ++n)
    CHECK(enumerate_cylinders(g, n, Side::u).size() == static_cast<std::size_t>(oracle::golden_cylinder_counts[n - 1]));
  const auto one = enumerate_cylinders(g, 1, Side::s);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == s("0"));
  CHECK(one[1] == s("1"));
  const auto three = enumerate_cylinders(g, 3, Side::u);
  CHECK(std::is_sorted(three.begin(), three.end()));
  CHECK(std::set<Word>(three.begin(), three.end()).size() == three.size());
  CHECK(enumerate_cylinders(g, 0, Side::u).empty());
}

TEST_CASE("mother drops deepest symbols") {
  CHECK(mother(u("010"), 1) == u("01"));
  CHECK(mother(s("110"), 2) == s("0"));
  try {
    mother(u("0"), 1);
    FAIL("mother of a 1-cylinder");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_shallow);
  }
  CHECK(mother(mother(u("0110"), 1), 2) == mother(u("0110"), 3));
}

TEST_CASE("periodic orbits match traces") {
  const auto f = support::full();
  const auto orbits = periodic_orbits(f, 2);
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0].word == Symbols{0});
  CHECK(orbits[1].word == Symbols{1});
  CHECK(orbits[2].word == Symbols{0, 1});
  CHECK(periodic_orbits(f, 0).empty());
  CHECK(periodic_orbits(f, 8).size() == static_cast<std::size_t>(oracle::full_orbits_p8));
  CHECK(periodic_orbits(support::golden(), 8).size() == static_cast<std::size_t>(oracle::golden_orbits_p8));

  for (const auto& [sys, traces] : {std::pair{f, oracle::full_traces}, std::pair{support::golden(), oracle::golden_traces}}) {
    const auto all = periodic_orbits(sys, 8);
    for (std::size_t p = 1; p <= 8; ++p) {
      std::size_t points = 0;
      for (const auto& o : all)
        if (p % o.period == 0) points += o.period;
      CHECK(points == static_cast<std::size_t>(traces[p - 1]));
      CHECK(trace(matrix_power(sys.matrix, p)) == traces[p - 1]);
    }
  }
}

TEST_CASE("cylinder counts follow the transfer recursion") {
  const auto g = support::golden();
  for (std::size_t n = 1; n < 8; ++n) {
    const auto pw = matrix_power(g.matrix, n);
    std::int64_t total = 0;
    for (const auto& row : pw)
      for (auto x : row) total += x;
    CHECK(enumerate_cylinders(g, n + 1, Side::u).size() == static_cast<std::size_t>(total));
  }
}

TEST_CASE("word text form round-trips") {
  for (const char* t : {"0", "0110", ""}) CHECK(to_string(u(t)) == t);
  const auto gap = support::sseg("00|10");
  CHECK(gap.is_gap());
  CHECK(to_string(gap) == "00|10");
  CHECK_THROWS_AS(parse_word("0a", Side::u), Error);
}
