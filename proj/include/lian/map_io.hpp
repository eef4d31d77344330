#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lian/grid.hpp"
#include "lian/harness.hpp"

namespace lian {

/// Parse failure with a 1-based line and column (column 0 when the whole
/// line is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Map document:
///
///     height <M>
///     width <N>
///     <M lines of N characters, '.' traversable, '#' blocked>
///
/// Header keys may come in either order. CR characters are ignored and
/// trailing blank lines are allowed.
Grid parse_map(std::string_view text);

/// Normalized map document; parse_map(serialize_map(g)) == g.
std::string serialize_map(const Grid& grid);

Grid load_map(const std::filesystem::path& path);
void save_map(const std::filesystem::path& path, const Grid& grid);

/// Task document: one "map-path start_i start_j goal_i goal_j" per line.
/// Blank lines and lines starting with '#' are skipped. Relative map paths
/// are kept verbatim; resolve them with resolve_map_path.
std::vector<TaskSpec> parse_tasks(std::string_view text);

std::vector<TaskSpec> load_tasks(const std::filesystem::path& path);

/// Map path of a task resolved against the directory of its task file.
std::filesystem::path resolve_map_path(const std::filesystem::path& task_file, const std::string& map_id);

/// Reads a whole file; throws std::runtime_error naming the path on failure.
std::string read_file(const std::filesystem::path& path);

}  // namespace lian
