#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lian/geometry.hpp"
#include "lian/grid.hpp"
#include "lian/search.hpp"
#include "lian/theta_search.hpp"

namespace lian {

enum class Algorithm { Lian, DLian, ThetaLa, WThetaLa };

std::string_view to_string(Algorithm algorithm);

/// One planner configuration of a benchmark run.
struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::Lian;
  double alpha_max = 25.0;
  double heuristic_weight = 2.0;
  int delta = 5;                        ///< Delta, or Delta_init for D-LIAN
  std::optional<DynamicDelta> dynamic;  ///< D-LIAN bounds; derived from delta when unset
  WeightParams weights;                 ///< wTheta*-LA only

  /// "LIAN-5", "DLIAN-10", "Theta*-LA", "wTheta*-LA".
  std::string label() const;
  /// Semicolon-separated key=value list, e.g. "alpha=25;w=2;delta=5".
  std::string params_string() const;
  SearchParams search_params(const Budget& budget) const;
  ThetaParams theta_params(const Budget& budget) const;
};

/// Runs `config` on one task. For wTheta*-LA `grid` must already carry the
/// obstacle weight field.
SearchResult run_algorithm(const Grid& grid, Cell start, Cell goal, const AlgorithmConfig& config,
                           const Budget& budget = {});

struct TaskSpec {
  std::string map_id;
  Cell start;
  Cell goal;
};

struct TaskRecord {
  TaskSpec task;
  std::string algorithm;
  std::string params;
  /// "path-found", "no-path", "budget-exhausted", "timeout" or "invalid-task".
  std::string outcome;
  bool success = false;
  bool excluded = false;  ///< configuration error, not part of the metrics
  double time_s = 0.0;
  std::size_t nodes = 0;     ///< peak |OPEN| + |CLOSED|
  double path_length = 0.0;  ///< cell units times meters_per_cell; 0 on failure
  double max_turn = 0.0;
  std::vector<int> section_deltas;
  std::string note;
};

struct SuiteMetrics {
  std::string algorithm;
  std::string params;
  std::size_t tasks = 0;  ///< records counted (excluded ones are not)
  std::size_t successes = 0;
  std::size_t excluded = 0;
  double cutoff_s = 0.0;
  double sr = 0.0;
  double par10 = 0.0;
  double mean_time_s = 0.0;      ///< over successes
  double mean_nodes_k = 0.0;     ///< kilonodes, over successes
  double mean_path_length = 0.0; ///< over successes
  std::vector<TaskRecord> records;
};

/// Aggregates per-task records: sr over counted tasks; time, nodes and length
/// averaged over successes; PAR-10 charging 10 x cutoff per failure.
SuiteMetrics aggregate(std::vector<TaskRecord> records, double cutoff_s);

struct SuiteOptions {
  double cutoff_s = 60.0;
  int jobs = 1;
  double meters_per_cell = 1.0;
};

using MapSet = std::map<std::string, Grid>;

/// Runs every task under the cooperative cutoff, `options.jobs` tasks at a
/// time (OpenMP). Invalid tasks become excluded records and a warning on
/// stderr.
SuiteMetrics run_suite(const MapSet& maps, std::span<const TaskSpec> tasks, const AlgorithmConfig& config,
                       const SuiteOptions& options);

/// Single-threaded reference for run_suite.
SuiteMetrics run_suite_serial(const MapSet& maps, std::span<const TaskSpec> tasks, const AlgorithmConfig& config,
                              const SuiteOptions& options);

/// Per-task CSV: map,start,goal,algorithm,params,outcome,time_s,nodes,path_length
void write_task_csv(std::ostream& out, std::span<const SuiteMetrics> suites);
/// Aggregate CSV: algorithm,params,tasks,successes,excluded,sr,par10_s,mean_time_s,mean_nodes_k,mean_path_length
void write_summary_csv(std::ostream& out, std::span<const SuiteMetrics> suites);
/// Human-readable table with sr, PAR-10, t, m and pl per configuration.
void write_summary_table(std::ostream& out, std::span<const SuiteMetrics> suites);

}  // namespace lian
