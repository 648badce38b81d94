#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "livsic/cocycle_gap.hpp"
#include "livsic/error.hpp"
#include "livsic/gibbs.hpp"
#include "livsic/layout.hpp"
#include "livsic/realization.hpp"
#include "livsic/sft.hpp"
#include "livsic/solenoid.hpp"
#include "livsic/word.hpp"

namespace livsic {

using Json = nlohmann::ordered_json;

/// A system file: the shift, its boundary tables and a gap layout per side.
struct SystemDescription {
  SftSystem sys;
  std::map<Side, GapLayout> layouts;

  [[nodiscard]] GapLayout layout(Side side) const {
    if (auto it = layouts.find(side); it != layouts.end()) return it->second;
    return no_gap_layout(sys, side);
  }

  friend bool operator==(const SystemDescription&, const SystemDescription&) = default;
};

struct CocycleDescription {
  CocycleGapPair pair;
  GapLayout layout;

  friend bool operator==(const CocycleDescription&, const CocycleDescription&) = default;
};

namespace detail {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(Errc::parse_error, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("field \"") + key + "\": " + e.what());
  }
}

inline Json segments_to_json(const std::vector<Segment>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

inline std::vector<Segment> segments_from_json(const Json& j, Side side) {
  std::vector<Segment> out;
  for (const auto& x : j) out.push_back(parse_segment(x.get<std::string>(), side));
  return out;
}

inline Json mother_layout_to_json(const MotherLayout& ml) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ml.children.size(); ++i) {
    out.push_back(ml.children[i]);
    if (i + 1 < ml.children.size() && ml.gap_after[i]) out.push_back("gap");
  }
  return out;
}

inline MotherLayout mother_layout_from_json(const Json& j) {
  MotherLayout ml;
  bool pending_gap = false;
  for (const auto& x : j) {
    if (x.is_string()) {
      if (x.get<std::string>() != "gap" || ml.children.empty() || pending_gap)
        throw Error(Errc::parse_error, "layout entries are symbols with single \"gap\" markers between them");
      pending_gap = true;
      continue;
    }
    if (!ml.children.empty()) ml.gap_after.push_back(pending_gap);
    ml.children.push_back(x.get<int>());
    pending_gap = false;
  }
  if (pending_gap) throw Error(Errc::parse_error, "layout cannot end with a gap");
  return ml;
}

}  // namespace detail

// ---- layouts ---------------------------------------------------------------------

inline Json to_json(const GapLayout& layout) {
  Json out;
  out["side"] = std::string(to_string(layout.side));
  out["root"] = detail::mother_layout_to_json(layout.root);
  for (std::size_t a = 0; a < layout.by_symbol.size(); ++a)
    out[std::to_string(a)] = detail::mother_layout_to_json(layout.by_symbol[a]);
  return out;
}

inline GapLayout layout_from_json(const Json& j, const SftSystem& sys) {
  GapLayout layout;
  layout.side = side_from_string(detail::get<std::string>(j, "side"));
  layout.root = detail::mother_layout_from_json(j.at("root"));
  for (std::size_t a = 0; a < sys.k; ++a) {
    const auto key = std::to_string(a);
    if (!j.contains(key)) throw Error(Errc::parse_error, "layout has no entry for symbol " + key);
    layout.by_symbol.push_back(detail::mother_layout_from_json(j.at(key)));
  }
  validate_layout(sys, layout);
  return layout;
}

// ---- boundary data ---------------------------------------------------------------

inline Json to_json(const BoundaryData& data) {
  Json out;
  out["matching"] = Json::array();
  for (const auto& m : data.matching)
    out["matching"].push_back({{"id", m.id},
                               {"side", to_string(m.side)},
                               {"first", to_string(m.first)},
                               {"second", to_string(m.second)},
                               {"decomposition", detail::segments_to_json(m.decomposition)},
                               {"split", m.split}});
  out["boundary"] = Json::array();
  for (const auto& b : data.boundary)
    out["boundary"].push_back({{"id", b.id},
                               {"side", to_string(b.side)},
                               {"base", to_string(b.base)},
                               {"first", detail::segments_to_json(b.first)},
                               {"second", detail::segments_to_json(b.second)}});
  out["cylinder_gap"] = Json::array();
  for (const auto& c : data.cylinder_gap)
    out["cylinder_gap"].push_back({{"id", c.id},
                                   {"side", to_string(c.side)},
                                   {"cylinder", to_string(c.cylinder)},
                                   {"gap", to_string(c.gap)},
                                   {"segments", detail::segments_to_json(c.segments)}});
  out["cylinder_cylinder"] = Json::array();
  for (const auto& c : data.cylinder_cylinder) {
    Json d = Json::array();
    for (const auto& w : c.decomposition) d.push_back(to_string(w));
    out["cylinder_cylinder"].push_back({{"id", c.id},
                                        {"side", to_string(c.side)},
                                        {"leaf", to_string(c.leaf)},
                                        {"first", to_string(c.first)},
                                        {"second", to_string(c.second)},
                                        {"other_leaf", to_string(c.other_leaf)},
                                        {"decomposition", d},
                                        {"split", c.split}});
  }
  return out;
}

inline BoundaryData boundary_from_json(const Json& j) {
  using detail::get;
  BoundaryData data;
  auto list = [&](const char* key) { return j.contains(key) ? j.at(key) : Json::array(); };
  for (const auto& m : list("matching")) {
    const Side side = side_from_string(get<std::string>(m, "side"));
    data.matching.push_back(MatchingInstance{get<std::string>(m, "id"), side,
                                             parse_segment(get<std::string>(m, "first"), side),
                                             parse_segment(get<std::string>(m, "second"), side),
                                             detail::segments_from_json(m.at("decomposition"), side),
                                             get<std::size_t>(m, "split")});
  }
  for (const auto& b : list("boundary")) {
    const Side side = side_from_string(get<std::string>(b, "side"));
    data.boundary.push_back(BoundaryInstance{get<std::string>(b, "id"), side,
                                             parse_segment(get<std::string>(b, "base"), side),
                                             detail::segments_from_json(b.at("first"), side),
                                             detail::segments_from_json(b.at("second"), side)});
  }
  for (const auto& c : list("cylinder_gap")) {
    const Side side = side_from_string(get<std::string>(c, "side"));
    data.cylinder_gap.push_back(CylinderGapInstance{get<std::string>(c, "id"), side,
                                                    parse_segment(get<std::string>(c, "cylinder"), side),
                                                    parse_segment(get<std::string>(c, "gap"), side),
                                                    detail::segments_from_json(c.at("segments"), side)});
  }
  for (const auto& c : list("cylinder_cylinder")) {
    const Side side = side_from_string(get<std::string>(c, "side"));
    std::vector<Word> d;
    for (const auto& w : c.at("decomposition")) d.push_back(parse_word(w.get<std::string>(), side));
    data.cylinder_cylinder.push_back(CylinderCylinderInstance{
        get<std::string>(c, "id"), side, parse_word(get<std::string>(c, "leaf"), dual(side)),
        parse_word(get<std::string>(c, "first"), side), parse_word(get<std::string>(c, "second"), side),
        parse_word(get<std::string>(c, "other_leaf"), dual(side)), std::move(d), get<std::size_t>(c, "split")});
  }
  return data;
}

// ---- systems and potentials ------------------------------------------------------

inline Json to_json(const SystemDescription& d) {
  Json out;
  out["alphabet"] = d.sys.k;
  out["matrix"] = d.sys.matrix;
  if (d.sys.boundary) out["boundary"] = to_json(*d.sys.boundary);
  if (!d.layouts.empty()) {
    out["layouts"] = Json::object();
    for (const auto& [side, layout] : d.layouts) out["layouts"][std::string(to_string(side))] = to_json(layout);
  }
  return out;
}

inline SystemDescription system_from_json(const Json& j) {
  const auto k = detail::get<std::size_t>(j, "alphabet");
  const auto matrix = detail::get<IntMatrix>(j, "matrix");
  std::optional<BoundaryData> boundary;
  if (j.contains("boundary")) boundary = boundary_from_json(j.at("boundary"));
  SystemDescription d{build_sft(k, matrix, std::move(boundary)), {}};
  if (j.contains("layouts"))
    for (const auto& [key, value] : j.at("layouts").items()) {
      auto layout = layout_from_json(value, d.sys);
      if (layout.side != side_from_string(key)) throw Error(Errc::parse_error, "layout filed under the wrong side");
      d.layouts[layout.side] = std::move(layout);
    }
  return d;
}

inline Json to_json(const Potential& phi) {
  Json values = Json::object();
  for (const auto& [w, v] : phi.values) values[to_string(Word{Side::u, w})] = v;
  return Json{{"range", phi.range}, {"tag", phi.tag}, {"values", values}};
}

inline Potential potential_from_json(const Json& j) {
  Potential phi;
  phi.range = detail::get<std::size_t>(j, "range");
  phi.tag = j.value("tag", std::string{});
  for (const auto& [key, value] : j.at("values").items()) {
    const auto w = parse_word(key, Side::u);
    if (w.depth() != phi.range) throw Error(Errc::parse_error, "potential word \"" + key + "\" has the wrong length");
    phi.values[w.symbols] = value.get<double>();
  }
  return phi;
}

// ---- solenoid and cocycle-gap files ----------------------------------------------

namespace detail {

inline Json pairs_to_json(const std::map<SegmentPair, double>& values) {
  Json out = Json::array();
  for (const auto& [key, v] : values)
    out.push_back({{"first", to_string(key.first)}, {"second", to_string(key.second)}, {"value", v}});
  return out;
}

inline std::map<SegmentPair, double> pairs_from_json(const Json& j, Side side) {
  std::map<SegmentPair, double> out;
  for (const auto& e : j) {
    const double v = get<double>(e, "value");
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(Errc::parse_error, "pair values must be positive and finite");
    out[{parse_segment(get<std::string>(e, "first"), side), parse_segment(get<std::string>(e, "second"), side)}] = v;
  }
  return out;
}

}  // namespace detail

inline Json to_json(const SolenoidSpec& s) {
  return Json{{"side", to_string(s.side)},
              {"kind", to_string(s.kind)},
              {"context_depth", s.context_depth},
              {"boundary_agnostic", s.boundary_agnostic},
              {"holder_exponent", s.holder_exponent},
              {"layout", to_json(s.layout)},
              {"values", detail::pairs_to_json(s.values)}};
}

inline SolenoidSpec solenoid_from_json(const Json& j, const SftSystem& sys) {
  SolenoidSpec s;
  s.side = side_from_string(detail::get<std::string>(j, "side"));
  s.kind = solenoid_kind_from_string(detail::get<std::string>(j, "kind"));
  s.context_depth = detail::get<std::size_t>(j, "context_depth");
  s.boundary_agnostic = j.value("boundary_agnostic", false);
  s.holder_exponent = j.value("holder_exponent", 1.0);
  s.layout = layout_from_json(j.at("layout"), sys);
  for (const auto& [key, v] : detail::pairs_from_json(j.at("values"), s.side)) s.set(key.first, key.second, v);
  return s;
}

inline Json to_json(const CocycleDescription& c) {
  Json kappa = Json::object();
  for (const auto& [w, v] : c.pair.cocycle.kappa) kappa[to_string(w)] = v;
  return Json{{"side", to_string(c.layout.side)},
              {"kappa", {{"depth", c.pair.cocycle.depth}, {"values", kappa}}},
              {"gamma", {{"depth", c.pair.gamma.depth}, {"values", detail::pairs_to_json(c.pair.gamma.values)}}},
              {"layout", to_json(c.layout)}};
}

inline CocycleDescription cocycle_from_json(const Json& j, const SftSystem& sys) {
  CocycleDescription c;
  const Side side = side_from_string(detail::get<std::string>(j, "side"));
  c.layout = layout_from_json(j.at("layout"), sys);
  if (c.layout.side != side) throw Error(Errc::parse_error, "cocycle layout is on the other side");
  const auto& kappa = j.at("kappa");
  c.pair.cocycle = MeasureLengthCocycle{side, detail::get<std::size_t>(kappa, "depth"), {}};
  for (const auto& [key, value] : kappa.at("values").items()) {
    const auto w = parse_word(key, side);
    const double v = value.get<double>();
    if (w.depth() != c.pair.cocycle.depth || !(v > 0.0))
      throw Error(Errc::parse_error, "kappa entry \"" + key + "\" must be a positive value on a depth-q word");
    c.pair.cocycle.kappa[w] = v;
  }
  const auto& gamma = j.at("gamma");
  c.pair.gamma = GapRatioFn{side, detail::get<std::size_t>(gamma, "depth"), detail::pairs_from_json(gamma.at("values"), side)};
  return c;
}

// ---- files -----------------------------------------------------------------------

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << text;
}

inline void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

// ---- CSV reports -----------------------------------------------------------------
// Reals are written with 17 significant digits, which reload to the same double.

inline std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline double parse_real(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw Error(Errc::parse_error, "trailing characters in number \"" + text + "\"");
    return v;
  } catch (const std::logic_error&) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    throw Error(Errc::parse_error, "not a number: \"" + text + "\"");
  }
}

namespace detail {

inline std::vector<std::vector<std::string>> read_csv(std::istream& in, std::size_t columns) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != columns) throw Error(Errc::parse_error, "expected " + std::to_string(columns) + " columns: " + line);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace detail

struct LengthRow {
  Segment segment;
  double length = 0.0;

  friend bool operator==(const LengthRow&, const LengthRow&) = default;
};

/// word,kind,depth,length for every stored cylinder and gap, by depth then word.
inline std::string realization_csv(const TrainTrackRealization& tt) {
  std::vector<LengthRow> rows;
  for (const auto& [x, l] : tt.lengths()) rows.push_back({x, l});
  std::stable_sort(rows.begin(), rows.end(), [](const LengthRow& a, const LengthRow& b) {
    return a.segment.depth() < b.segment.depth();
  });
  std::ostringstream os;
  os << "word,kind,depth,length\n";
  for (const auto& r : rows)
    os << to_string(r.segment) << ',' << (r.segment.is_gap() ? "gap" : "cylinder") << ',' << r.segment.depth() << ','
       << format_real(r.length) << '\n';
  return os.str();
}

inline std::vector<LengthRow> read_realization_csv(std::istream& in, Side side) {
  std::vector<LengthRow> out;
  for (const auto& c : detail::read_csv(in, 4)) {
    auto x = parse_segment(c[0], side);
    if ((c[1] == "gap") != x.is_gap() || std::to_string(x.depth()) != c[2])
      throw Error(Errc::parse_error, "inconsistent realization row for " + c[0]);
    out.push_back({std::move(x), parse_real(c[3])});
  }
  return out;
}

inline std::string eigen_csv(const std::vector<EigenvalueReport>& reports) {
  std::ostringstream os;
  os << "orbit,period,lambda_ratio,lambda_measure,residual\n";
  for (const auto& r : reports)
    os << to_string(Word{Side::u, r.orbit.word}) << ',' << r.orbit.period << ',' << format_real(r.lambda_ratio) << ','
       << format_real(r.lambda_measure) << ',' << format_real(r.residual) << '\n';
  return os.str();
}

inline std::vector<EigenvalueReport> read_eigen_csv(std::istream& in) {
  std::vector<EigenvalueReport> out;
  for (const auto& c : detail::read_csv(in, 5)) {
    PeriodicOrbit o{parse_word(c[0], Side::u).symbols, static_cast<std::size_t>(std::stoul(c[1]))};
    out.push_back({std::move(o), parse_real(c[2]), parse_real(c[3]), parse_real(c[4])});
  }
  return out;
}

inline std::string residuals_csv(const std::vector<Residual>& rs) {
  std::ostringstream os;
  os << "id,lhs,rhs,residual\n";
  for (const auto& r : rs)
    os << r.id << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ',' << format_real(r.residual) << '\n';
  return os.str();
}

inline std::vector<Residual> read_residuals_csv(std::istream& in) {
  std::vector<Residual> out;
  for (const auto& c : detail::read_csv(in, 4))
    out.push_back({c[0], parse_real(c[1]), parse_real(c[2]), parse_real(c[3])});
  return out;
}

struct MeasureRow {
  Word word;
  double measure = 0.0;

  friend bool operator==(const MeasureRow&, const MeasureRow&) = default;
};

inline std::vector<MeasureRow> measure_rows(const GibbsTable& g, std::size_t depth) {
  std::vector<MeasureRow> out;
  for (std::size_t n = 1; n <= depth; ++n)
    for (const auto& w : enumerate_cylinders(g.system(), n, Side::u)) out.push_back({w, g.measure(w)});
  return out;
}

inline std::string measures_csv(const std::vector<MeasureRow>& rows) {
  std::ostringstream os;
  os << "word,depth,measure\n";
  for (const auto& r : rows) os << to_string(r.word) << ',' << r.word.depth() << ',' << format_real(r.measure) << '\n';
  return os.str();
}

inline std::vector<MeasureRow> read_measures_csv(std::istream& in) {
  std::vector<MeasureRow> out;
  for (const auto& c : detail::read_csv(in, 3)) {
    auto w = parse_word(c[0], Side::u);
    if (std::to_string(w.depth()) != c[1]) throw Error(Errc::parse_error, "inconsistent measure row for " + c[0]);
    out.push_back({std::move(w), parse_real(c[2])});
  }
  return out;
}

struct SynthesisRow {
  Segment segment;
  double ratio = 0.0;
  double length = 0.0;

  friend bool operator==(const SynthesisRow&, const SynthesisRow&) = default;
};

inline std::vector<SynthesisRow> synthesis_rows(const TrainTrackRealization& tt) {
  std::vector<SynthesisRow> out;
  for (const auto& [x, l] : tt.lengths()) out.push_back({x, tt.child_ratio(x), l});
  std::stable_sort(out.begin(), out.end(), [](const SynthesisRow& a, const SynthesisRow& b) {
    return a.segment.depth() < b.segment.depth();
  });
  return out;
}

inline std::string synthesis_csv(const std::vector<SynthesisRow>& rows) {
  std::ostringstream os;
  os << "descriptor,ratio,length,depth\n";
  for (const auto& r : rows)
    os << to_string(r.segment) << ',' << format_real(r.ratio) << ',' << format_real(r.length) << ','
       << r.segment.depth() << '\n';
  return os.str();
}

inline std::vector<SynthesisRow> read_synthesis_csv(std::istream& in, Side side) {
  std::vector<SynthesisRow> out;
  for (const auto& c : detail::read_csv(in, 4)) {
    auto x = parse_segment(c[0], side);
    if (std::to_string(x.depth()) != c[3]) throw Error(Errc::parse_error, "inconsistent synthesis row for " + c[0]);
    out.push_back({std::move(x), parse_real(c[1]), parse_real(c[2])});
  }
  return out;
}

inline Json to_json(const DimensionReport& d) {
  return Json{{"delta", d.delta}, {"pressure_residual", d.pressure_residual}, {"iterations", d.iterations}};
}

inline DimensionReport dimension_from_json(const Json& j) {
  return DimensionReport{detail::get<double>(j, "delta"), detail::get<double>(j, "pressure_residual"),
                         detail::get<std::size_t>(j, "iterations")};
}

}  // namespace livsic
