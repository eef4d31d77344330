#include "lian/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lian/lian_search.hpp"
#include "lian/map_io.hpp"
#include "lian/svg.hpp"
#include "lian/theta_search.hpp"
#include "lian/urban_map.hpp"

namespace lian::cli {

namespace fs = std::filesystem;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  const std::string n = lower(name);
  if (n == "lian") return Algorithm::Lian;
  if (n == "dlian") return Algorithm::DLian;
  if (n == "theta-la") return Algorithm::ThetaLa;
  if (n == "wtheta-la") return Algorithm::WThetaLa;
  return std::nullopt;
}

std::string cell_str(Cell c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << text;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string map;
  std::vector<int> start;
  std::vector<int> goal;
  std::string algorithm = "lian";
  double alpha_max = 25.0;
  int delta = 5;
  int delta_min = 0;
  int delta_max = 0;
  int n_increase = 2;
  double hweight = 2.0;
  double weight_p = 0.1;
  int weight_r = 12;
  double timeout = 60.0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::string out_svg;
  bool angle_labels = false;
};

void register_solve(CLI::App& sub, SolveArgs& a) {
  sub.add_option("--map", a.map, "Map file")->required();
  sub.add_option("--start", a.start, "Start cell: I J")->expected(2)->required();
  sub.add_option("--goal", a.goal, "Goal cell: I J")->expected(2)->required();
  sub.add_option("--algorithm", a.algorithm, "lian | dlian | theta-la | wtheta-la")->capture_default_str();
  sub.add_option("--alpha-max", a.alpha_max, "Maximum turn angle, degrees")->capture_default_str();
  sub.add_option("--delta,--delta-init", a.delta, "Delta (LIAN) or initial Delta (D-LIAN)")->capture_default_str();
  sub.add_option("--delta-min", a.delta_min, "D-LIAN lower bound (default delta/2)");
  sub.add_option("--delta-max", a.delta_max, "D-LIAN upper bound (default delta)");
  sub.add_option("--n-increase", a.n_increase, "D-LIAN successful expansions before Delta grows")
      ->capture_default_str();
  sub.add_option("--hweight", a.hweight, "Heuristic weight w in f = g + w*h")->capture_default_str();
  sub.add_option("--weight-p", a.weight_p, "wTheta*-LA max weighting penalty")->capture_default_str();
  sub.add_option("--weight-r", a.weight_r, "wTheta*-LA weighting radius")->capture_default_str();
  sub.add_option("--timeout", a.timeout, "Time budget, seconds")->capture_default_str();
  sub.add_option("--seed", a.seed, "Random seed (solve itself is deterministic)");
  sub.add_option("--scale", a.scale, "Map units per cell for reported lengths")->capture_default_str();
  sub.add_option("--out-svg", a.out_svg, "Write an SVG rendering here");
  sub.add_flag("--angle-labels", a.angle_labels, "Label turn angles in the SVG");
}

AlgorithmConfig solve_config(const CLI::App& sub, const SolveArgs& a) {
  const auto algorithm = parse_algorithm(a.algorithm);
  if (!algorithm) throw UsageError("unknown algorithm '" + a.algorithm + "'");
  const bool theta = *algorithm == Algorithm::ThetaLa || *algorithm == Algorithm::WThetaLa;
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (theta) {
    for (const char* flag : {"--delta", "--delta-min", "--delta-max", "--n-increase"})
      if (given(flag)) throw UsageError(std::string(flag) + " does not apply to " + a.algorithm);
  }
  if (*algorithm != Algorithm::WThetaLa) {
    for (const char* flag : {"--weight-p", "--weight-r"})
      if (given(flag)) throw UsageError(std::string(flag) + " only applies to wtheta-la");
  }
  if (*algorithm == Algorithm::Lian) {
    for (const char* flag : {"--delta-min", "--delta-max", "--n-increase"})
      if (given(flag)) throw UsageError(std::string(flag) + " only applies to dlian");
  }

  AlgorithmConfig config;
  config.algorithm = *algorithm;
  config.alpha_max = a.alpha_max;
  config.heuristic_weight = a.hweight;
  config.delta = a.delta;
  config.weights = {a.weight_p, a.weight_r};
  if (*algorithm == Algorithm::DLian) {
    DynamicDelta d = DynamicDelta::from_initial(a.delta);
    if (given("--delta-min")) d.delta_min = a.delta_min;
    if (given("--delta-max")) d.delta_max = a.delta_max;
    d.n_increase = a.n_increase;
    config.dynamic = d;
  }
  try {
    if (theta) {
      config.theta_params({}).validate();
      config.weights.validate();
    } else {
      config.search_params({}).validate();
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(a.timeout > 0.0)) throw UsageError("--timeout must be positive");
  return config;
}

int solve(const CLI::App& sub, const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const AlgorithmConfig config = solve_config(sub, a);
  Grid grid = load_map(a.map);
  if (config.algorithm == Algorithm::WThetaLa) grid = with_obstacle_weights(std::move(grid), config.weights);
  const Cell start{a.start[0], a.start[1]};
  const Cell goal{a.goal[0], a.goal[1]};

  Budget budget;
  budget.max_time = std::chrono::duration<double>(a.timeout);
  const SearchResult res = run_algorithm(grid, start, goal, config, budget);

  out << "algorithm: " << config.label() << '\n';
  out << "params: " << config.params_string() << '\n';
  out << "start: " << cell_str(start) << '\n';
  out << "goal: " << cell_str(goal) << '\n';

  int code = kNoPath;
  std::string outcome(to_string(res.outcome));
  if (res.outcome == Outcome::BudgetExhausted) code = kBudgetExhausted;
  if (res.found()) {
    const PathCheck check = validate_path(grid, *res.path, start, goal, config.alpha_max);
    if (check) {
      code = kPathFound;
    } else {
      err << "error: planner returned an invalid path: " << check.reason << '\n';
      outcome = "invalid-path";
      code = kInternalError;
    }
  }

  out << "outcome: " << outcome << '\n';
  out << std::fixed << std::setprecision(6);
  if (code == kPathFound) {
    out << "path_length: " << path_length(*res.path) * a.scale << '\n';
    out << "max_turn_deg: " << max_turn_angle(*res.path) << '\n';
    out << "sections: " << res.path->sections.size() << '\n';
    out << "path:";
    for (Cell c : res.path->cells()) out << ' ' << cell_str(c);
    out << '\n';
  }
  out << "nodes_created: " << res.nodes_created << '\n';
  out << "nodes_expanded: " << res.nodes_expanded << '\n';
  out << "max_stored_nodes: " << res.max_stored_nodes << '\n';
  out << "time_s: " << res.elapsed.count() << '\n';

  if (!a.out_svg.empty()) {
    SvgOptions opts;
    opts.angle_labels = a.angle_labels;
    std::optional<Path> drawn;
    if (code == kPathFound) drawn = res.path;
    write_text(a.out_svg, render_svg(grid, drawn, opts));
  }
  return code;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string tasks;
  std::vector<std::string> configs{"lian-5", "lian-10", "theta-la", "wtheta-la"};
  std::vector<double> alphas{25.0};
  double hweight = 2.0;
  double weight_p = 0.1;
  int weight_r = 12;
  double cutoff = 60.0;
  int jobs = 1;
  double scale = 1.0;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
};

void register_bench(CLI::App& sub, BenchArgs& a) {
  sub.add_option("--tasks", a.tasks, "Task file")->required();
  sub.add_option("--configs", a.configs, "Configurations, e.g. lian-5,dlian-10,theta-la,wtheta-la")
      ->delimiter(',')
      ->capture_default_str();
  sub.add_option("--alpha-max", a.alphas, "Angle limits, degrees")->delimiter(',')->capture_default_str();
  sub.add_option("--hweight", a.hweight, "Heuristic weight")->capture_default_str();
  sub.add_option("--weight-p", a.weight_p, "wTheta*-LA max weighting penalty")->capture_default_str();
  sub.add_option("--weight-r", a.weight_r, "wTheta*-LA weighting radius")->capture_default_str();
  sub.add_option("--cutoff,--timeout", a.cutoff, "Per-task cutoff, seconds")->capture_default_str();
  sub.add_option("--jobs", a.jobs, "Tasks run in parallel")->capture_default_str();
  sub.add_option("--scale", a.scale, "Map units per cell for path lengths")->capture_default_str();
  sub.add_option("--out-dir", a.out_dir, "Directory for tasks.csv and summary.csv")->capture_default_str();
  sub.add_option("--seed", a.seed, "Random seed (benchmarks are deterministic)");
}

int bench(const BenchArgs& a, std::ostream& out) {
  std::vector<AlgorithmConfig> configs;
  for (double alpha : a.alphas) {
    for (const std::string& token : a.configs) {
      auto c = parse_config_token(token);
      if (!c) throw UsageError("unknown configuration '" + token + "'");
      c->alpha_max = alpha;
      c->heuristic_weight = a.hweight;
      c->weights = {a.weight_p, a.weight_r};
      try {
        c->search_params({}).validate();
        c->weights.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(token + ": " + e.what());
      }
      configs.push_back(*c);
    }
  }
  if (!(a.cutoff > 0.0)) throw UsageError("--cutoff must be positive");
  if (a.jobs < 1) throw UsageError("--jobs must be >= 1");

  const fs::path task_file(a.tasks);
  const std::vector<TaskSpec> tasks = load_tasks(task_file);
  if (tasks.empty()) throw std::runtime_error("task file '" + a.tasks + "' contains no tasks");

  MapSet maps;
  for (const TaskSpec& t : tasks)
    if (!maps.contains(t.map_id)) maps.emplace(t.map_id, load_map(resolve_map_path(task_file, t.map_id)));

  SuiteOptions options;
  options.cutoff_s = a.cutoff;
  options.jobs = a.jobs;
  options.meters_per_cell = a.scale;

  std::vector<SuiteMetrics> suites;
  for (const AlgorithmConfig& c : configs) suites.push_back(run_suite(maps, tasks, c, options));

  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  std::ostringstream per_task;
  std::ostringstream summary;
  write_task_csv(per_task, suites);
  write_summary_csv(summary, suites);
  write_text(dir / "tasks.csv", per_task.str());
  write_text(dir / "summary.csv", summary.str());
  write_summary_table(out, suites);
  out << "wrote " << (dir / "tasks.csv").string() << " and " << (dir / "summary.csv").string() << '\n';
  return 0;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::uint64_t seed = 1;
  UrbanMapParams map;
  int maps = 1;
  TaskSampling sampling;
  std::string out_dir = ".";
};

void register_generate(CLI::App& sub, GenerateArgs& a) {
  sub.add_option("--seed", a.seed, "Seed for maps and tasks")->capture_default_str();
  sub.add_option("--height", a.map.height)->capture_default_str();
  sub.add_option("--width", a.map.width)->capture_default_str();
  sub.add_option("--density", a.map.density, "Target blocked fraction")->capture_default_str();
  sub.add_option("--min-size", a.map.min_size, "Smallest building side")->capture_default_str();
  sub.add_option("--max-size", a.map.max_size, "Largest building side")->capture_default_str();
  sub.add_option("--street-width", a.map.street_width, "Minimum gap between buildings")->capture_default_str();
  sub.add_option("--maps", a.maps, "Number of maps")->capture_default_str();
  sub.add_option("--tasks-per-map", a.sampling.count)->capture_default_str();
  sub.add_option("--min-dist-fraction", a.sampling.min_dist_fraction, "Start-goal distance / diagonal")
      ->capture_default_str();
  sub.add_option("--out-dir", a.out_dir)->capture_default_str();
}

int generate(const GenerateArgs& a, std::ostream& out) {
  if (a.maps < 1) throw UsageError("--maps must be >= 1");
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  std::ostringstream tasks;
  for (int k = 0; k < a.maps; ++k) {
    const std::uint64_t map_seed = a.seed * 1'000'003ULL + static_cast<std::uint64_t>(k);
    const Grid grid = generate_urban_map(map_seed, a.map);
    std::ostringstream name;
    name << "map_" << std::setw(3) << std::setfill('0') << k << ".map";
    save_map(dir / name.str(), grid);
    for (const auto& [s, g] : sample_tasks(grid, map_seed ^ 0x9e3779b97f4a7c15ULL, a.sampling))
      tasks << name.str() << ' ' << s.i << ' ' << s.j << ' ' << g.i << ' ' << g.j << '\n';
  }
  write_text(dir / "tasks.txt", tasks.str());
  out << "wrote " << a.maps << " maps and " << (dir / "tasks.txt").string() << '\n';
  return 0;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
  std::string map;
  std::string out_svg;
  bool weights = false;
  double weight_p = 0.1;
  int weight_r = 12;
};

void register_render(CLI::App& sub, RenderArgs& a) {
  sub.add_option("--map", a.map, "Map file")->required();
  sub.add_option("--out-svg", a.out_svg, "Output SVG")->required();
  sub.add_flag("--weights", a.weights, "Shade the wTheta*-LA weight field");
  sub.add_option("--weight-p", a.weight_p)->capture_default_str();
  sub.add_option("--weight-r", a.weight_r)->capture_default_str();
}

int render(const RenderArgs& a, std::ostream& out) {
  Grid grid = load_map(a.map);
  SvgOptions opts;
  if (a.weights) {
    grid = with_obstacle_weights(std::move(grid), {a.weight_p, a.weight_r});
    opts.shade_weights = true;
  }
  write_text(a.out_svg, render_svg(grid, std::nullopt, opts));
  out << "wrote " << a.out_svg << '\n';
  return 0;
}

}  // namespace

std::optional<AlgorithmConfig> parse_config_token(std::string_view token) {
  std::string t = lower(token);
  std::erase(t, '*');
  AlgorithmConfig c;
  if (t == "theta-la") {
    c.algorithm = Algorithm::ThetaLa;
    return c;
  }
  if (t == "wtheta-la") {
    c.algorithm = Algorithm::WThetaLa;
    return c;
  }
  const auto dash = t.rfind('-');
  if (dash == std::string::npos) return std::nullopt;
  const std::string head = t.substr(0, dash);
  const std::string tail = t.substr(dash + 1);
  if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
      tail.size() > 6)
    return std::nullopt;
  c.delta = std::stoi(tail);
  if (c.delta < 1) return std::nullopt;
  if (head == "lian") {
    c.algorithm = Algorithm::Lian;
  } else if (head == "dlian" || head == "d-lian") {
    c.algorithm = Algorithm::DLian;
    c.dynamic = DynamicDelta::from_initial(c.delta);
  } else {
    return std::nullopt;
  }
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Angle-constrained grid path planning (LIAN, D-LIAN, Theta*-LA, wTheta*-LA)", "lian"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  BenchArgs bench_args;
  GenerateArgs generate_args;
  RenderArgs render_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Plan one path");
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a task suite and write CSV metrics");
  CLI::App* generate_cmd = app.add_subcommand("generate", "Generate urban-like maps and a task file");
  CLI::App* render_cmd = app.add_subcommand("render", "Render a map as SVG");
  register_solve(*solve_cmd, solve_args);
  register_bench(*bench_cmd, bench_args);
  register_generate(*generate_cmd, generate_args);
  register_render(*render_cmd, render_args);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInvalidInput;
  }

  try {
    if (solve_cmd->parsed()) return solve(*solve_cmd, solve_args, out, err);
    if (bench_cmd->parsed()) return bench(bench_args, out);
    if (generate_cmd->parsed()) return generate(generate_args, out);
    if (render_cmd->parsed()) return render(render_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace lian::cli
