#include "lian/harness.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>

#include "lian/lian_search.hpp"

namespace lian {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Lian:
      return "lian";
    case Algorithm::DLian:
      return "dlian";
    case Algorithm::ThetaLa:
      return "theta-la";
    case Algorithm::WThetaLa:
      return "wtheta-la";
  }
  return "unknown";
}

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string fmt_fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::string AlgorithmConfig::label() const {
  switch (algorithm) {
    case Algorithm::Lian:
      return "LIAN-" + std::to_string(delta);
    case Algorithm::DLian:
      return "DLIAN-" + std::to_string(delta);
    case Algorithm::ThetaLa:
      return "Theta*-LA";
    case Algorithm::WThetaLa:
      return "wTheta*-LA";
  }
  return "?";
}

std::string AlgorithmConfig::params_string() const {
  std::string s = "alpha=" + fmt_num(alpha_max) + ";w=" + fmt_num(heuristic_weight);
  switch (algorithm) {
    case Algorithm::Lian:
      s += ";delta=" + std::to_string(delta);
      break;
    case Algorithm::DLian: {
      const DynamicDelta d = dynamic.value_or(DynamicDelta::from_initial(delta));
      s += ";delta=" + std::to_string(delta) + ";delta_min=" + std::to_string(d.delta_min) +
           ";delta_max=" + std::to_string(d.delta_max) + ";n=" + std::to_string(d.n_increase);
      break;
    }
    case Algorithm::ThetaLa:
      break;
    case Algorithm::WThetaLa:
      s += ";p=" + fmt_num(weights.p) + ";r=" + std::to_string(weights.r);
      break;
  }
  return s;
}

SearchParams AlgorithmConfig::search_params(const Budget& budget) const {
  SearchParams p;
  p.alpha_max = alpha_max;
  p.delta = delta;
  p.heuristic_weight = heuristic_weight;
  if (algorithm == Algorithm::DLian) p.dynamic = dynamic.value_or(DynamicDelta::from_initial(delta));
  p.budget = budget;
  return p;
}

ThetaParams AlgorithmConfig::theta_params(const Budget& budget) const {
  ThetaParams p;
  p.alpha_max = alpha_max;
  p.heuristic_weight = heuristic_weight;
  p.use_weights = algorithm == Algorithm::WThetaLa;
  p.budget = budget;
  return p;
}

SearchResult run_algorithm(const Grid& grid, Cell start, Cell goal, const AlgorithmConfig& config,
                           const Budget& budget) {
  switch (config.algorithm) {
    case Algorithm::Lian:
    case Algorithm::DLian:
      return lian_search(grid, start, goal, config.search_params(budget));
    case Algorithm::ThetaLa:
    case Algorithm::WThetaLa:
      return theta_la_search(grid, start, goal, config.theta_params(budget));
  }
  throw std::logic_error("unknown algorithm");
}

SuiteMetrics aggregate(std::vector<TaskRecord> records, double cutoff_s) {
  SuiteMetrics m;
  m.cutoff_s = cutoff_s;
  double time_sum = 0.0;
  double nodes_sum = 0.0;
  double length_sum = 0.0;
  std::size_t failures = 0;
  for (const TaskRecord& r : records) {
    if (r.excluded) {
      ++m.excluded;
      continue;
    }
    ++m.tasks;
    if (r.success) {
      ++m.successes;
      time_sum += r.time_s;
      nodes_sum += static_cast<double>(r.nodes);
      length_sum += r.path_length;
    } else {
      ++failures;
    }
  }
  if (!records.empty()) {
    m.algorithm = records.front().algorithm;
    m.params = records.front().params;
  }
  if (m.tasks > 0) {
    const auto n = static_cast<double>(m.tasks);
    m.sr = static_cast<double>(m.successes) / n;
    m.par10 = (time_sum + 10.0 * cutoff_s * static_cast<double>(failures)) / n;
  }
  if (m.successes > 0) {
    const auto s = static_cast<double>(m.successes);
    m.mean_time_s = time_sum / s;
    m.mean_nodes_k = nodes_sum / s / 1000.0;
    m.mean_path_length = length_sum / s;
  }
  m.records = std::move(records);
  return m;
}

namespace {

TaskRecord run_task(const MapSet& maps, const MapSet& weighted, const TaskSpec& task,
                    const AlgorithmConfig& config, const SuiteOptions& options) {
  TaskRecord rec;
  rec.task = task;
  rec.algorithm = config.label();
  rec.params = config.params_string();

  const MapSet& source = config.algorithm == Algorithm::WThetaLa ? weighted : maps;
  const auto it = source.find(task.map_id);
  if (it == source.end()) {
    rec.excluded = true;
    rec.outcome = "invalid-task";
    rec.note = "unknown map '" + task.map_id + "'";
    return rec;
  }
  const Grid& grid = it->second;
  try {
    check_task(grid, task.start, task.goal);
  } catch (const InvalidTask& e) {
    rec.excluded = true;
    rec.outcome = "invalid-task";
    rec.note = e.what();
    return rec;
  }

  Budget budget;
  budget.max_time = std::chrono::duration<double>(options.cutoff_s);
  const SearchResult res = run_algorithm(grid, task.start, task.goal, config, budget);
  rec.time_s = res.elapsed.count();
  rec.nodes = res.max_stored_nodes;
  rec.outcome = std::string(to_string(res.outcome));
  if (res.found()) {
    const PathCheck check = validate_path(grid, *res.path, task.start, task.goal, config.alpha_max);
    if (!check) {
      rec.outcome = "invalid-path";
      rec.note = check.reason;
    } else if (rec.time_s > options.cutoff_s) {
      rec.outcome = "timeout";
    } else {
      rec.success = true;
      rec.path_length = path_length(*res.path) * options.meters_per_cell;
      rec.max_turn = max_turn_angle(*res.path);
      rec.section_deltas = res.section_deltas;
    }
  }
  return rec;
}

MapSet weighted_maps(const MapSet& maps, std::span<const TaskSpec> tasks, const AlgorithmConfig& config) {
  MapSet out;
  if (config.algorithm != Algorithm::WThetaLa) return out;
  for (const TaskSpec& t : tasks) {
    if (out.contains(t.map_id)) continue;
    const auto it = maps.find(t.map_id);
    if (it != maps.end()) out.emplace(t.map_id, with_obstacle_weights(it->second, config.weights));
  }
  return out;
}

void warn_excluded(const SuiteMetrics& m) {
  for (const TaskRecord& r : m.records)
    if (r.excluded) std::cerr << "warning: " << r.algorithm << ": excluded task on '" << r.task.map_id << "': " << r.note << '\n';
}

}  // namespace

SuiteMetrics run_suite_serial(const MapSet& maps, std::span<const TaskSpec> tasks, const AlgorithmConfig& config,
                              const SuiteOptions& options) {
  const MapSet weighted = weighted_maps(maps, tasks, config);
  std::vector<TaskRecord> records;
  records.reserve(tasks.size());
  for (const TaskSpec& t : tasks) records.push_back(run_task(maps, weighted, t, config, options));
  SuiteMetrics m = aggregate(std::move(records), options.cutoff_s);
  warn_excluded(m);
  return m;
}

SuiteMetrics run_suite(const MapSet& maps, std::span<const TaskSpec> tasks, const AlgorithmConfig& config,
                       const SuiteOptions& options) {
  if (options.jobs <= 1) return run_suite_serial(maps, tasks, config, options);
  const MapSet weighted = weighted_maps(maps, tasks, config);
  std::vector<TaskRecord> records(tasks.size());
  const auto count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
  for (long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    records[idx] = run_task(maps, weighted, tasks[idx], config, options);
  }
  SuiteMetrics m = aggregate(std::move(records), options.cutoff_s);
  warn_excluded(m);
  return m;
}

namespace {

std::string cell_field(Cell c) { return std::to_string(c.i) + " " + std::to_string(c.j); }

// Quotes a CSV field when it contains a separator or quote.
std::string csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string q = "\"";
  for (char ch : field) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

void write_task_csv(std::ostream& out, std::span<const SuiteMetrics> suites) {
  out << "map,start,goal,algorithm,params,outcome,time_s,nodes,path_length\n";
  for (const SuiteMetrics& m : suites) {
    for (const TaskRecord& r : m.records) {
      out << csv(r.task.map_id) << ',' << cell_field(r.task.start) << ',' << cell_field(r.task.goal) << ','
          << csv(r.algorithm) << ',' << csv(r.params) << ',' << r.outcome << ',' << fmt_fixed(r.time_s, 6) << ','
          << r.nodes << ',' << fmt_fixed(r.path_length, 6) << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, std::span<const SuiteMetrics> suites) {
  out << "algorithm,params,tasks,successes,excluded,sr,par10_s,mean_time_s,mean_nodes_k,mean_path_length\n";
  for (const SuiteMetrics& m : suites) {
    out << csv(m.algorithm) << ',' << csv(m.params) << ',' << m.tasks << ',' << m.successes << ',' << m.excluded
        << ',' << fmt_fixed(m.sr, 6) << ',' << fmt_fixed(m.par10, 6) << ',' << fmt_fixed(m.mean_time_s, 6) << ','
        << fmt_fixed(m.mean_nodes_k, 6) << ',' << fmt_fixed(m.mean_path_length, 6) << '\n';
  }
}

void write_summary_table(std::ostream& out, std::span<const SuiteMetrics> suites) {
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-52s %7s %10s %9s %9s %10s\n", "algorithm", "params", "sr", "PAR-10",
                "t", "m", "pl");
  out << line;
  for (const SuiteMetrics& m : suites) {
    std::snprintf(line, sizeof line, "%-12s %-52s %6.1f%% %10.3f %9.4f %9.2f %10.2f\n", m.algorithm.c_str(),
                  m.params.c_str(), 100.0 * m.sr, m.par10, m.mean_time_s, m.mean_nodes_k, m.mean_path_length);
    out << line;
  }
  out << "(t in seconds over successes, m in kilonodes, pl in map units)\n";
}

}  // namespace lian
