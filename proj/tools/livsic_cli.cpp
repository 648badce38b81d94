// livsic: run built-in or file-based scenarios and write reports.
//
//   livsic list
//   livsic run <builtin> <task>... [--depth N] [--p-max P] [--out DIR] ...
//   livsic run --system sys.json --potential phi.json <task>...

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "livsic/cocycle_gap.hpp"
#include "livsic/io.hpp"
#include "livsic/realization.hpp"
#include "livsic/scenario.hpp"
#include "livsic/solenoid.hpp"

namespace fs = std::filesystem;
using namespace livsic;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_tolerance = 3;
constexpr int exit_inadmissible = 4;

const std::map<std::string, double> default_tolerance{
    {"gibbs", 1e-12},  {"solenoid-check", 1e-10}, {"synthesize", 1e-12}, {"dimension", 1e-10},
    {"eigenvalues", 1e-9}, {"livsic", 1e-10},     {"dual", 1e-9},
};

struct Options {
  std::vector<std::string> positional;
  std::string system_file, potential_file, solenoid_file, cocycle_file;
  std::size_t depth = 8;
  std::size_t p_max = 8;
  std::optional<double> delta, pressure, tol;
  std::string out = ".";
  std::string format = "csv";
};

struct TaskResult {
  std::string task;
  std::string status = "ok";
  double worst = 0.0;
  double tolerance = 0.0;
  std::string message;
  int exit_code = exit_ok;
};

class Runner {
 public:
  Runner(Scenario sc, const Options& opt) : sc_(std::move(sc)), opt_(opt), g_(sc_.gibbs()) {}

  TaskResult run(const std::string& task) {
    TaskResult r;
    r.task = task;
    r.tolerance = opt_.tol.value_or(default_tolerance.at(task));
    try {
      if (task == "gibbs") r.worst = gibbs();
      else if (task == "solenoid-check") r.worst = solenoid_check(r);
      else if (task == "synthesize") r.worst = synthesize(r);
      else if (task == "dimension") r.worst = dimension();
      else if (task == "eigenvalues") r.worst = eigenvalues();
      else if (task == "livsic") r.worst = livsic();
      else if (task == "dual") r.worst = dual_task(r);
      if (!(r.worst <= r.tolerance)) {
        r.status = "tolerance_exceeded";
        r.exit_code = exit_tolerance;
      }
    } catch (const Error& e) {
      r.status = std::string(to_string(e.code()));
      r.message = e.what();
      r.exit_code = e.code() == Errc::parse_error || e.code() == Errc::unknown_builtin ? exit_parse : exit_inadmissible;
    }
    return r;
  }

 private:
  [[nodiscard]] std::vector<Side> sides() const {
    std::vector<Side> out;
    for (Side s : {Side::u, Side::s})
      if (sc_.has_side(s)) out.push_back(s);
    return out;
  }

  const TrainTrackRealization& realization(Side side) {
    auto it = realizations_.find(side);
    if (it == realizations_.end()) {
      it = realizations_.emplace(side, realize(sc_, side, g_, opt_.depth)).first;
      write_table("realization_" + std::string(to_string(side)), realization_csv(it->second));
    }
    return it->second;
  }

  [[nodiscard]] fs::path path(const std::string& stem, const char* ext) const { return fs::path(opt_.out) / (stem + ext); }

  /// Writes a CSV table, or the same rows as a JSON array of objects.
  void write_table(const std::string& stem, const std::string& csv) const {
    if (opt_.format == "csv") {
      write_text_file(path(stem, ".csv").string(), csv);
      return;
    }
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::vector<std::string> header;
    {
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    Json rows = Json::array();
    while (std::getline(in, line)) {
      std::stringstream ss(line);
      std::string cell;
      Json row = Json::object();
      for (std::size_t i = 0; std::getline(ss, cell, ','); ++i) {
        if (i == 0 || header[i] == "kind") row[header[i]] = cell;
        else if (header[i] == "depth" || header[i] == "period") row[header[i]] = std::stoll(cell);
        else row[header[i]] = parse_real(cell);
      }
      rows.push_back(row);
    }
    write_json_file(path(stem, ".json").string(), rows);
  }

  double gibbs() {
    const auto& sys = sc_.sys();
    const std::size_t top = std::min<std::size_t>(opt_.depth, 10);
    double worst = 0.0;
    for (std::size_t n = 1; n <= top; ++n) {
      double total = 0.0;
      for (const auto& w : enumerate_cylinders(sys, n, Side::u)) total += g_.measure(w);
      worst = std::max(worst, std::abs(total - 1.0));
    }
    // Scaling sums over the preimages of every stabilized leaf, both sides.
    for (Side side : {Side::u, Side::s}) {
      for (const auto& xi : enumerate_cylinders(sys, g_.range(), side)) {
        double total = 0.0;
        for (int a = 0; a < static_cast<int>(sys.k); ++a) {
          const Word eta = pull_back(xi, a);
          if (sys.admissible(eta)) total += measure_scaling(g_, eta);
        }
        worst = std::max(worst, std::abs(total - 1.0));
      }
    }
    write_table("measures", measures_csv(measure_rows(g_, top)));
    return worst;
  }

  double solenoid_check(TaskResult& r) {
    const auto& data = sc_.sys().boundary;
    std::optional<SolenoidSpec> from_file;
    if (!opt_.solenoid_file.empty()) from_file = solenoid_from_json(read_json_file(opt_.solenoid_file), sc_.sys());
    std::vector<Residual> all;
    auto add = [&all](const std::string& prefix, const std::vector<Residual>& rs) {
      for (auto x : rs) {
        x.id = prefix + ":" + x.id;
        all.push_back(std::move(x));
      }
    };
    if (data) {
      for (Side side : sides()) {
        const auto sigma = from_file && from_file->side == side ? *from_file
                                                                 : solenoid_from_realization(realization(side), data);
        add("matching", check_matching(sigma, *data));
        add("boundary", check_boundary(sigma, *data));
        add("cylinder-gap", check_cylinder_gap(sigma, *data));
      }
      add("cylinder-cylinder", check_cylinder_cylinder(g_, *data));
    } else {
      r.message = "boundary-agnostic: no boundary tables";
    }
    write_table("residuals", residuals_csv(all));
    return max_residual(all);
  }

  double synthesize(TaskResult& r) {
    std::optional<CocycleDescription> from_file;
    if (!opt_.cocycle_file.empty()) from_file = cocycle_from_json(read_json_file(opt_.cocycle_file), sc_.sys());
    double worst = 0.0;
    std::vector<std::string> notes;
    for (Side side : sides()) {
      const auto& model = sc_.model(side);
      std::optional<CocycleGapPair> pair = model.pair;
      if (from_file && from_file->layout.side == side) pair = from_file->pair;
      if (!pair) continue;
      const double delta = opt_.delta.value_or(model.delta);
      const double pressure = opt_.pressure.value_or(model.pressure);
      const auto layout = sc_.system.layout(side);
      const auto report = validate_cocycle(pair->cocycle, g_, delta, pressure);
      notes.push_back(std::string(to_string(side)) + " margin " + format_real(report.margin));
      const auto tt = synthesize_ratio(g_, delta, pressure, *pair, layout, opt_.depth);
      write_table("synthesis_" + std::string(to_string(side)), synthesis_csv(synthesis_rows(tt)));
      for (std::size_t n = 0; n < opt_.depth; ++n) {
        for (const auto& mother : n == 0 ? std::vector<Word>{root(side)} : enumerate_cylinders(sc_.sys(), n, side)) {
          double sum = 0.0;
          for (const auto& x : layout.slots(mother)) sum += tt.child_ratio(x);
          worst = std::max(worst, std::abs(sum - 1.0));
        }
      }
      if (const auto& data = sc_.sys().boundary) {
        const auto rs = check_cocycle_gap_property(*pair, data, g_, delta, pressure, layout, opt_.depth);
        write_table("cocycle_gap_" + std::string(to_string(side)), residuals_csv(rs));
        worst = std::max(worst, max_residual(rs));
      }
    }
    if (notes.empty()) notes.push_back("no synthesized side");
    for (const auto& n : notes) r.message += (r.message.empty() ? "" : "; ") + n;
    return worst;
  }

  double dimension() {
    Json out = Json::object();
    double worst = 0.0;
    for (Side side : sides()) {
      const auto d = hausdorff_dimension(realization(side));
      out[std::string(to_string(side))] = to_json(d);
      worst = std::max(worst, d.pressure_residual);
    }
    write_json_file(path("dimension", ".json").string(), out);
    return worst;
  }

  double eigenvalues() {
    double worst = 0.0;
    for (Side side : sides()) {
      const auto reports = eigenvalue_reports(realization(side), g_, opt_.p_max);
      for (const auto& e : reports) worst = std::max(worst, e.residual);
      write_table("eigen_" + std::string(to_string(side)), eigen_csv(reports));
    }
    return worst;
  }

  double livsic() {
    const auto& ts = realization(Side::s);
    const auto& tu = realization(Side::u);
    return livsic_sinai_check(ts, tu, g_, ts.delta(), tu.delta(), ts.pressure(), tu.pressure(), opt_.p_max);
  }

  double dual_task(TaskResult& r) {
    double worst = 0.0;
    bool any = false;
    std::optional<Error> last;
    for (Side side : sides()) {
      try {
        const auto dual_tt = dual_pair(g_, realization(side), sc_.system.layout(dual(side)));
        any = true;
        const std::size_t n = std::max<std::size_t>(opt_.depth, 3);
        const auto at_n = natural_measure_check(dual_tt, g_, 1.0, 0.0, n);
        const auto before = natural_measure_check(dual_tt, g_, 1.0, 0.0, n - 2);
        const double drift = std::abs(at_n.second / at_n.first - before.second / before.first);
        worst = std::max(worst, drift);
        r.message += std::string(r.message.empty() ? "" : "; ") + "dual of " + std::string(to_string(side)) +
                     " kappa in [" + format_real(at_n.first) + ", " + format_real(at_n.second) + "]";
        write_table("realization_dual_" + std::string(to_string(side)), realization_csv(dual_tt));
      } catch (const Error& e) {
        if (e.code() != Errc::gap_on_dual_side) throw;
        last = e;
      }
    }
    if (!any) throw last.value_or(Error(Errc::gap_on_dual_side, "no side has a gap-free dual"));
    return worst;
  }

  Scenario sc_;
  const Options& opt_;
  GibbsTable g_;
  std::map<Side, TrainTrackRealization> realizations_;
};

Scenario scenario_from_files(const Options& opt) {
  Scenario sc;
  sc.name = fs::path(opt.system_file).stem().string();
  sc.system = system_from_json(read_json_file(opt.system_file));
  if (opt.potential_file.empty()) throw Error(Errc::parse_error, "--system needs --potential");
  sc.potential = potential_from_json(read_json_file(opt.potential_file), sc.sys());
  std::optional<CocycleDescription> cocycle;
  if (!opt.cocycle_file.empty()) cocycle = cocycle_from_json(read_json_file(opt.cocycle_file), sc.sys());
  for (Side side : {Side::u, Side::s}) {
    if (cocycle && cocycle->layout.side == side) {
      sc.system.layouts[side] = cocycle->layout;
      sc.sides[side] = SideModel{SideModelKind::synthesized, opt.delta.value_or(1.0), opt.pressure.value_or(0.0), {},
                                 cocycle->pair};
    } else if (!sc.system.layout(side).has_gaps()) {
      sc.sides[side] = SideModel{};
    }
  }
  return sc;
}

int run(const Options& opt) {
  std::vector<std::string> tasks = opt.positional;
  std::optional<Scenario> sc;
  try {
    if (opt.system_file.empty()) {
      if (tasks.empty()) throw Error(Errc::parse_error, "missing built-in name");
      sc = builtin(tasks.front());
      tasks.erase(tasks.begin());
      if (opt.delta || opt.pressure)
        for (auto& [side, model] : sc->sides)
          if (model.kind != SideModelKind::measure) {
            model.delta = opt.delta.value_or(model.delta);
            model.pressure = opt.pressure.value_or(model.pressure);
          }
    } else {
      sc = scenario_from_files(opt);
    }
    if (tasks.empty()) throw Error(Errc::parse_error, "no tasks given");
    for (const auto& t : tasks)
      if (!default_tolerance.contains(t)) throw Error(Errc::parse_error, "unknown task \"" + t + "\"");
    if (opt.depth < 1 || opt.depth > 16) throw Error(Errc::parse_error, "--depth must be in 1..16");
    if (opt.p_max < 1 || opt.p_max > 10) throw Error(Errc::parse_error, "--p-max must be in 1..10");
    fs::create_directories(opt.out);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == Errc::parse_error || e.code() == Errc::unknown_builtin ? exit_parse : exit_inadmissible;
  }

  Runner runner(*sc, opt);
  Json summary{{"scenario", sc->name}, {"depth", opt.depth}, {"p_max", opt.p_max}, {"tasks", Json::array()}};
  int code = exit_ok;
  auto rank = [](int c) { return c == exit_parse ? 3 : c == exit_inadmissible ? 2 : c == exit_tolerance ? 1 : 0; };
  for (const auto& task : tasks) {
    TaskResult r;
    try {
      r = runner.run(task);
    } catch (const Error& e) {
      r = TaskResult{task, std::string(to_string(e.code())), 0.0, 0.0, e.what(), exit_parse};
    }
    std::cout << task << ": " << r.status << " worst " << std::setprecision(3) << r.worst << " tol " << r.tolerance;
    if (!r.message.empty()) std::cout << " (" << r.message << ")";
    std::cout << '\n';
    summary["tasks"].push_back({{"task", r.task},
                                {"status", r.status},
                                {"worst_residual", r.worst},
                                {"tolerance", r.tolerance},
                                {"message", r.message}});
    if (rank(r.exit_code) > rank(code)) code = r.exit_code;
  }
  summary["exit_code"] = code;
  write_json_file((fs::path(opt.out) / "summary.json").string(), summary);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gibbs measures, solenoid functions and train-track realizations on subshifts of finite type"};
  app.require_subcommand(1);
  auto* list = app.add_subcommand("list", "List built-in scenarios");
  Options opt;
  auto* run_cmd = app.add_subcommand("run", "Run tasks on a built-in scenario or on system/potential files");
  run_cmd->add_option("args", opt.positional, "[builtin] task... (tasks: gibbs solenoid-check synthesize dimension "
                                              "eigenvalues livsic dual)");
  run_cmd->add_option("--system", opt.system_file, "System description JSON");
  run_cmd->add_option("--potential", opt.potential_file, "Potential JSON");
  run_cmd->add_option("--solenoid", opt.solenoid_file, "Solenoid function JSON replacing one side's realized one");
  run_cmd->add_option("--cocycle", opt.cocycle_file, "Cocycle-gap JSON (kappa, gamma, layout)");
  run_cmd->add_option("--depth", opt.depth, "Realization depth N")->capture_default_str();
  run_cmd->add_option("--p-max", opt.p_max, "Largest orbit period")->capture_default_str();
  run_cmd->add_option("--delta", opt.delta, "Exponent delta for synthesized and affine sides");
  run_cmd->add_option("--pressure", opt.pressure, "Pressure P for synthesized and affine sides");
  run_cmd->add_option("--tol", opt.tol, "Tolerance for every task");
  run_cmd->add_option("--out", opt.out, "Output directory")->capture_default_str();
  run_cmd->add_option("--format", opt.format, "Table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : exit_parse;
  }
  if (*list) {
    for (const auto& name : builtin_names()) std::cout << name << '\n';
    return exit_ok;
  }
  return run(opt);
}
