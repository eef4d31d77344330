#include "lian/map_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace lian {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : "") + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

std::optional<long long> to_int(std::string_view word) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size()) return std::nullopt;
  return v;
}

}  // namespace

Grid parse_map(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<int> height;
  std::optional<int> width;
  std::size_t k = 0;
  for (; k < lines.size() && (!height || !width); ++k) {
    const auto words = split_words(lines[k]);
    if (words.size() != 2) throw ParseError(k + 1, 0, "expected 'height <M>' or 'width <N>'");
    const auto value = to_int(words[1]);
    if (!value || *value < 1 || *value > 1'000'000) throw ParseError(k + 1, 0, "invalid dimension");
    if (words[0] == "height" && !height) {
      height = static_cast<int>(*value);
    } else if (words[0] == "width" && !width) {
      width = static_cast<int>(*value);
    } else {
      throw ParseError(k + 1, 0, "unexpected header key '" + std::string(words[0]) + "'");
    }
  }
  if (!height || !width) throw ParseError(lines.size() + 1, 0, "missing height/width header");

  const std::size_t body_lines = lines.size() - k;
  if (body_lines != static_cast<std::size_t>(*height))
    throw ParseError(lines.size(), 0, "header declares " + std::to_string(*height) + " rows, body has " +
                                          std::to_string(body_lines));

  Grid grid(*height, *width);
  for (int i = 0; i < *height; ++i, ++k) {
    const std::string_view row = lines[k];
    if (row.size() != static_cast<std::size_t>(*width))
      throw ParseError(k + 1, 0, "row has " + std::to_string(row.size()) + " cells, expected " +
                                     std::to_string(*width));
    for (int j = 0; j < *width; ++j) {
      const char ch = row[static_cast<std::size_t>(j)];
      if (ch == '#') {
        grid.set_blocked({i, j}, true);
      } else if (ch != '.') {
        throw ParseError(k + 1, static_cast<std::size_t>(j) + 1, std::string("illegal cell character '") + ch + "'");
      }
    }
  }
  return grid;
}

std::string serialize_map(const Grid& grid) {
  std::string out = "height " + std::to_string(grid.height()) + "\nwidth " + std::to_string(grid.width()) + "\n";
  out.reserve(out.size() + grid.size() + static_cast<std::size_t>(grid.height()));
  for (int i = 0; i < grid.height(); ++i) {
    for (int j = 0; j < grid.width(); ++j) out += grid.traversable({i, j}) ? '.' : '#';
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Grid load_map(const std::filesystem::path& path) {
  try {
    return parse_map(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

void save_map(const std::filesystem::path& path, const Grid& grid) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serialize_map(grid);
}

std::vector<TaskSpec> parse_tasks(std::string_view text) {
  std::vector<TaskSpec> tasks;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto words = split_words(lines[k]);
    if (words.empty() || words[0].front() == '#') continue;
    if (words.size() != 5) throw ParseError(k + 1, 0, "expected 'map-path start_i start_j goal_i goal_j'");
    int coords[4];
    for (int c = 0; c < 4; ++c) {
      const auto v = to_int(words[static_cast<std::size_t>(c) + 1]);
      if (!v || *v < 0 || *v > 1'000'000) throw ParseError(k + 1, 0, "coordinate is not a non-negative integer");
      coords[c] = static_cast<int>(*v);
    }
    tasks.push_back({std::string(words[0]), {coords[0], coords[1]}, {coords[2], coords[3]}});
  }
  return tasks;
}

std::vector<TaskSpec> load_tasks(const std::filesystem::path& path) {
  try {
    return parse_tasks(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

std::filesystem::path resolve_map_path(const std::filesystem::path& task_file, const std::string& map_id) {
  const std::filesystem::path p(map_id);
  if (p.is_absolute()) return p;
  return task_file.parent_path() / p;
}

}  // namespace lian
