#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "livsic/builtin_data.hpp"
#include "livsic/cocycle_gap.hpp"
#include "livsic/error.hpp"
#include "livsic/gibbs.hpp"
#include "livsic/io.hpp"
#include "livsic/realization.hpp"

namespace livsic {

enum class SideModelKind { affine, synthesized, measure };

/// How one side's train-track realization is produced.
struct SideModel {
  SideModelKind kind = SideModelKind::measure;
  double delta = 1.0;
  double pressure = 0.0;
  std::vector<double> ratios;          ///< affine: ratio per child symbol
  std::optional<CocycleGapPair> pair;  ///< synthesized
};

struct Scenario {
  std::string name;
  SystemDescription system;
  Potential potential;
  std::map<Side, SideModel> sides;

  [[nodiscard]] const SftSystem& sys() const { return system.sys; }
  [[nodiscard]] GibbsTable gibbs() const { return gibbs_from_potential(system.sys, potential); }
  [[nodiscard]] bool has_side(Side side) const { return sides.contains(side); }
  [[nodiscard]] const SideModel& model(Side side) const {
    if (auto it = sides.find(side); it != sides.end()) return it->second;
    throw Error(Errc::parse_error, "scenario " + name + " has no " + std::string(to_string(side)) + "-side model");
  }
};

/// Potential in value form, or the shorthands {"constant": c, "range": m} and
/// {"markov": [[...]]} (range 2, values log P).
inline Potential potential_from_json(const Json& j, const SftSystem& sys) {
  const auto tag = j.value("tag", std::string{});
  if (j.contains("constant"))
    return constant_potential(sys, detail::get<std::size_t>(j, "range"), detail::get<double>(j, "constant"), tag);
  if (j.contains("markov")) {
    const auto p = detail::get<std::vector<std::vector<double>>>(j, "markov");
    if (p.size() != sys.k) throw Error(Errc::parse_error, "markov matrix must be k x k");
    for (const auto& row : p)
      if (row.size() != sys.k) throw Error(Errc::parse_error, "markov matrix must be k x k");
    for (const auto& w : enumerate_cylinders(sys, 2, Side::u))
      if (!(p[static_cast<std::size_t>(w.symbols[0])][static_cast<std::size_t>(w.symbols[1])] > 0.0))
        throw Error(Errc::parse_error, "markov matrix needs positive allowed transitions");
    return markov_potential(sys, p, tag);
  }
  auto phi = potential_from_json(j);
  for (const auto& w : enumerate_cylinders(sys, phi.range, Side::u))
    if (!phi.values.contains(w.symbols)) throw Error(Errc::parse_error, "potential misses word " + to_string(w));
  return phi;
}

inline SideModel side_model_from_json(const Json& j, const SftSystem& sys) {
  SideModel m;
  const auto kind = detail::get<std::string>(j, "model");
  m.delta = j.value("delta", 1.0);
  m.pressure = j.value("pressure", 0.0);
  if (kind == "measure") {
    m.kind = SideModelKind::measure;
  } else if (kind == "affine") {
    m.kind = SideModelKind::affine;
    m.ratios = detail::get<std::vector<double>>(j, "ratios");
    if (m.ratios.size() != sys.k) throw Error(Errc::parse_error, "affine model needs one ratio per symbol");
  } else if (kind == "synthesized") {
    m.kind = SideModelKind::synthesized;
    m.pair = cocycle_from_json(j.at("cocycle"), sys).pair;
  } else {
    throw Error(Errc::parse_error, "unknown side model \"" + kind + "\"");
  }
  return m;
}

inline Scenario scenario_from_json(const Json& j) {
  Scenario sc;
  sc.name = j.value("name", std::string{"custom"});
  sc.system = system_from_json(j.at("system"));
  sc.potential = potential_from_json(j.at("potential"), sc.sys());
  if (j.contains("sides"))
    for (const auto& [key, value] : j.at("sides").items())
      sc.sides[side_from_string(key)] = side_model_from_json(value, sc.sys());
  return sc;
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : builtin_data::scenarios) out.emplace_back(name);
  return out;
}

inline Scenario builtin(std::string_view name) {
  for (const auto& [key, text] : builtin_data::scenarios)
    if (key == name) return scenario_from_json(parse_json_text(text));
  throw Error(Errc::unknown_builtin, "no built-in scenario \"" + std::string(name) + "\"");
}

/// The side's realization to `depth` under its model.
inline TrainTrackRealization realize(const Scenario& sc, Side side, const GibbsTable& g, std::size_t depth) {
  const auto& m = sc.model(side);
  const auto layout = sc.system.layout(side);
  switch (m.kind) {
    case SideModelKind::affine:
      return affine_realization(sc.sys(), layout, m.ratios, depth, m.delta, m.pressure);
    case SideModelKind::synthesized:
      return synthesize_ratio(g, m.delta, m.pressure, *m.pair, layout, depth);
    case SideModelKind::measure:
      break;
  }
  return measure_realization(g, side, layout, depth);
}

}  // namespace livsic
