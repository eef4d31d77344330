#include "lian/search.hpp"

#include <sstream>

namespace lian {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::PathFound:
      return "path-found";
    case Outcome::NoPath:
      return "no-path";
    case Outcome::BudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

void SearchParams::validate() const {
  if (!(alpha_max > 0.0 && alpha_max < 180.0)) throw std::invalid_argument("alpha_max must lie in (0, 180)");
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  if (!(heuristic_weight >= 1.0)) throw std::invalid_argument("heuristic weight must be >= 1");
  if (dynamic) {
    if (dynamic->delta_min < 1) throw std::invalid_argument("delta_min must be >= 1");
    if (!(dynamic->delta_min <= delta && delta <= dynamic->delta_max))
      throw std::invalid_argument("require delta_min <= delta_init <= delta_max");
    if (dynamic->n_increase < 1) throw std::invalid_argument("n_increase must be >= 1");
  }
}

namespace {

std::string str(Cell c) {
  std::ostringstream os;
  os << '(' << c.i << ',' << c.j << ')';
  return os.str();
}

}  // namespace

PathCheck validate_path(const Grid& grid, const Path& path, Cell start, Cell goal, double alpha_max) {
  if (path.empty()) return {false, "path has no sections"};
  if (path.start() != start) return {false, "path starts at " + str(path.start()) + ", expected " + str(start)};
  if (path.goal() != goal) return {false, "path ends at " + str(path.goal()) + ", expected " + str(goal)};
  for (std::size_t k = 0; k < path.sections.size(); ++k) {
    const Section& s = path.sections[k];
    if (s.tail == s.head) return {false, "zero-length section " + std::to_string(k)};
    if (k > 0 && path.sections[k - 1].head != s.tail) return {false, "sections " + std::to_string(k) + " not adjacent"};
    if (!grid.in_bounds(s.tail) || !grid.in_bounds(s.head))
      return {false, "section " + std::to_string(k) + " leaves the grid"};
    if (!line_of_sight(grid, s.tail, s.head))
      return {false, "section " + str(s.tail) + "->" + str(s.head) + " has no line of sight"};
    if (k > 0) {
      const double a = turn_angle(path.sections[k - 1], s);
      if (!angle_within(a, alpha_max))
        return {false, "turn of " + std::to_string(a) + " deg at " + str(s.tail) + " exceeds limit"};
    }
  }
  return {};
}

void check_task(const Grid& grid, Cell start, Cell goal) {
  if (!grid.in_bounds(start)) throw InvalidTask("start " + str(start) + " outside grid");
  if (!grid.in_bounds(goal)) throw InvalidTask("goal " + str(goal) + " outside grid");
  if (grid.blocked(start)) throw InvalidTask("start " + str(start) + " is blocked");
  if (grid.blocked(goal)) throw InvalidTask("goal " + str(goal) + " is blocked");
  if (start == goal) throw InvalidTask("start and goal coincide at " + str(start));
}

}  // namespace lian
