#include "lian/lian_search.hpp"

#include <cmath>

namespace lian {

Path reconstruct_path(std::span<const ChainLink> nodes, NodeId goal) {
  const auto chain = walk_chain(goal, nodes.size(), [&](NodeId id) { return nodes[static_cast<std::size_t>(id)].parent; });
  if (chain.size() < 2) throw std::logic_error("parent chain has no sections");
  std::vector<Cell> cells;
  cells.reserve(chain.size());
  for (NodeId id : chain) cells.push_back(nodes[static_cast<std::size_t>(id)].cell);
  return Path::through(cells);
}

LianSearch::LianSearch(const Grid& grid, Cell start, Cell goal, SearchParams params, SearchHooks hooks)
    : grid_(grid), start_(start), goal_(goal), params_(std::move(params)), hooks_(std::move(hooks)) {
  params_.validate();
  check_task(grid_, start_, goal_);
}

std::uint64_t LianSearch::closed_key(Cell cell, std::optional<Cell> parent) const {
  const std::uint64_t n = grid_.size();
  const std::uint64_t p = parent ? grid_.index(*parent) : n;
  return grid_.index(cell) * (n + 1) + p;
}

bool LianSearch::is_closed(NodeId id) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  std::optional<Cell> parent;
  if (n.parent != kNoNode) parent = nodes_[static_cast<std::size_t>(n.parent)].cell;
  return closed_.contains(closed_key(n.cell, parent));
}

const std::vector<Offset>& LianSearch::offsets(int radius) {
  auto it = circles_.find(radius);
  if (it == circles_.end()) it = circles_.emplace(radius, circle_offsets(radius)).first;
  return it->second;
}

NodeId LianSearch::make_node(Cell cell, NodeId parent, int delta) {
  Node n{cell, 0.0, parent, delta, 0, 0};
  if (parent != kNoNode) {
    const Node& p = nodes_[static_cast<std::size_t>(parent)];
    n.g = p.g + euclid_dist(p.cell, cell);
  }
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeEvent LianSearch::view(NodeId id) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  NodeEvent ev;
  ev.id = id;
  ev.parent_id = n.parent;
  ev.cell = n.cell;
  if (n.parent != kNoNode) ev.parent_cell = nodes_[static_cast<std::size_t>(n.parent)].cell;
  ev.g = n.g;
  ev.f = n.g + params_.heuristic_weight * euclid_dist(n.cell, goal_);
  ev.delta = n.delta;
  ev.section_delta = n.section_delta;
  return ev;
}

void LianSearch::note_storage() { peak_stored_ = std::max(peak_stored_, open_.size() + closed_.size()); }

void LianSearch::push_open(NodeId id) {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  const double f = n.g + params_.heuristic_weight * euclid_dist(n.cell, goal_);
  open_.push({f, n.g, n.cell, seq_++, id});
  ++created_;
  note_storage();
  if (hooks_.on_push) hooks_.on_push(view(id));
}

void LianSearch::close(NodeId id) {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  std::optional<Cell> parent;
  if (n.parent != kNoNode) parent = nodes_[static_cast<std::size_t>(n.parent)].cell;
  closed_.insert(closed_key(n.cell, parent));
  note_storage();
}

std::vector<NodeEvent> LianSearch::expand(NodeId id) {
  const Node node = nodes_[static_cast<std::size_t>(id)];
  std::optional<Cell> parent_cell;
  if (node.parent != kNoNode) parent_cell = nodes_[static_cast<std::size_t>(node.parent)].cell;
  const Offset incoming = parent_cell ? node.cell - *parent_cell : Offset{};

  std::vector<Cell> candidates;  // traversable, angle-valid, not closed
  std::vector<Cell> survivors;   // ... and visible
  int delta = node.delta;
  bool halved = false;

  auto consider = [&](Cell c) {
    if (c == node.cell || !grid_.traversable(c)) return;
    if (parent_cell && !angle_within(turn_angle(incoming, c - node.cell), params_.alpha_max)) return;
    if (closed_.contains(closed_key(c, node.cell))) return;
    candidates.push_back(c);
  };

  for (;;) {
    candidates.clear();
    survivors.clear();
    bool goal_on_circle = false;
    for (Offset o : offsets(delta)) {
      const Cell c = node.cell + o;
      goal_on_circle = goal_on_circle || c == goal_;
      consider(c);
    }
    if (!goal_on_circle && euclid_dist(node.cell, goal_) < delta) consider(goal_);
    for (Cell c : candidates)
      if (line_of_sight_unchecked(grid_, node.cell, c)) survivors.push_back(c);

    if (!survivors.empty() || !params_.dynamic) break;
    const int next = delta / 2;
    if (next < params_.dynamic->delta_min) break;
    delta = next;
    halved = true;
  }

  int child_delta = delta;
  int child_streak = 0;
  if (params_.dynamic) {
    child_streak = halved ? 0 : node.streak + 1;
    if (child_streak >= params_.dynamic->n_increase) {
      child_delta = std::min(delta * 2, params_.dynamic->delta_max);
      child_streak = 0;
    }
  }

  std::vector<NodeEvent> pushed;
  pushed.reserve(survivors.size());
  for (Cell c : survivors) {
    const NodeId child = make_node(c, id, child_delta);
    Node& n = nodes_[static_cast<std::size_t>(child)];
    n.section_delta = delta;
    n.streak = child_streak;
    push_open(child);
    pushed.push_back(view(child));
  }
  return pushed;
}

SearchResult LianSearch::run() {
  if (used_) throw std::logic_error("LianSearch::run called twice");
  used_ = true;

  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  SearchResult result;
  auto finish = [&](Outcome outcome) {
    result.outcome = outcome;
    result.nodes_created = created_;
    result.max_stored_nodes = peak_stored_;
    result.elapsed = Clock::now() - t0;
    return result;
  };

  push_open(make_node(start_, kNoNode, params_.delta));

  while (!open_.empty()) {
    if (params_.budget.max_expansions && result.nodes_expanded >= *params_.budget.max_expansions)
      return finish(Outcome::BudgetExhausted);
    if (params_.budget.max_time && Clock::now() - t0 > *params_.budget.max_time)
      return finish(Outcome::BudgetExhausted);

    const OpenEntry top = open_.top();
    open_.pop();
    if (is_closed(top.node)) continue;  // twin generated before its sibling was closed

    const Node& n = nodes_[static_cast<std::size_t>(top.node)];
    if (n.cell == goal_) {
      const auto chain = walk_chain(top.node, nodes_.size(),
                                    [&](NodeId id) { return nodes_[static_cast<std::size_t>(id)].parent; });
      std::vector<Cell> cells;
      for (NodeId id : chain) {
        cells.push_back(nodes_[static_cast<std::size_t>(id)].cell);
        if (id != chain.front()) result.section_deltas.push_back(nodes_[static_cast<std::size_t>(id)].section_delta);
      }
      result.path = Path::through(cells);
      result.cost = n.g;
      return finish(Outcome::PathFound);
    }

    close(top.node);
    ++result.nodes_expanded;
    if (hooks_.on_expand) hooks_.on_expand(view(top.node));
    expand(top.node);
  }
  return finish(Outcome::NoPath);
}

SearchResult lian_search(const Grid& grid, Cell start, Cell goal, const SearchParams& params,
                         const SearchHooks& hooks) {
  LianSearch search(grid, start, goal, params, hooks);
  return search.run();
}

}  // namespace lian
