#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <cstdint>
#include <map>
#include <queue>
#include <span>
#include <unordered_set>
#include <vector>

#include "lian/geometry.hpp"
#include "lian/grid.hpp"
#include "lian/search.hpp"

namespace lian {

using NodeId = std::int64_t;
inline constexpr NodeId kNoNode = -1;

/// Minimal view of a node needed to walk parent pointers.
struct ChainLink {
  Cell cell;
  NodeId parent = kNoNode;
};

/// Walks parent pointers from `goal` to the root over `node_count` nodes
/// and returns the node ids in root-to-goal order. Throws std::logic_error
/// on a dangling index or a cycle.
template <class ParentOf>
std::vector<NodeId> walk_chain(NodeId goal, std::size_t node_count, ParentOf parent_of) {
  std::vector<NodeId> chain;
  for (NodeId id = goal; id != kNoNode; id = parent_of(id)) {
    if (id < 0 || static_cast<std::size_t>(id) >= node_count)
      throw std::logic_error("broken parent chain: dangling node index");
    if (chain.size() > node_count) throw std::logic_error("broken parent chain: cycle");
    chain.push_back(id);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

/// Follows parent pointers from `goal` back to the root and returns the
/// section chain in start-to-goal order. Throws std::logic_error if the
/// chain is broken (dangling index, cycle) or has fewer than two nodes.
Path reconstruct_path(std::span<const ChainLink> nodes, NodeId goal);

/// LIAN best-first search over (cell, parent) nodes whose successors lie on
/// the midpoint circle of radius Delta. With `params.dynamic` set this is
/// D-LIAN: Delta halves when every line-of-sight check of an expansion fails
/// and doubles again after a run of successful expansions.
///
/// A search object is single use: construct, then run().
class LianSearch {
 public:
  /// Throws InvalidTask for bad endpoints and std::invalid_argument for bad
  /// parameters.
  LianSearch(const Grid& grid, Cell start, Cell goal, SearchParams params, SearchHooks hooks = {});

  SearchResult run();

  // Building blocks of run(), public so expansion rules can be exercised
  // directly in tests.

  /// Creates a node for `cell` under `parent` (kNoNode for a root) with g
  /// accumulated from the parent. The node is neither in OPEN nor CLOSED.
  NodeId make_node(Cell cell, NodeId parent, int delta);
  /// Marks the node as expanded.
  void close(NodeId id);
  /// Generates, prunes and pushes the successors of `id` to OPEN. Returns
  /// the pushed nodes in generation order.
  std::vector<NodeEvent> expand(NodeId id);

  NodeEvent view(NodeId id) const;
  std::size_t open_size() const { return open_.size(); }
  std::size_t closed_size() const { return closed_.size(); }

 private:
  struct Node {
    Cell cell;
    double g;
    NodeId parent;
    int delta;          // Delta this node expands with
    int section_delta;  // Delta that generated it
    int streak;         // consecutive un-halved successful expansions up the chain
  };

  struct OpenEntry {
    double f;
    double g;
    Cell cell;
    std::uint64_t seq;
    NodeId node;
  };
  // priority_queue keeps the "largest" on top, so this orders the best entry last.
  struct WorseEntry {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
      if (a.f != b.f) return a.f > b.f;
      if (a.g != b.g) return a.g < b.g;
      if (a.cell != b.cell) return b.cell < a.cell;
      return a.seq > b.seq;
    }
  };

  std::uint64_t closed_key(Cell cell, std::optional<Cell> parent) const;
  bool is_closed(NodeId id) const;
  const std::vector<Offset>& offsets(int radius);
  void push_open(NodeId id);
  void note_storage();

  const Grid& grid_;
  Cell start_;
  Cell goal_;
  SearchParams params_;
  SearchHooks hooks_;

  std::vector<Node> nodes_;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, WorseEntry> open_;
  std::unordered_set<std::uint64_t> closed_;
  std::map<int, std::vector<Offset>> circles_;
  std::vector<NodeId> scratch_;
  std::uint64_t seq_ = 0;
  std::size_t peak_stored_ = 0;
  std::size_t created_ = 0;
  bool used_ = false;
};

/// Runs LIAN (or D-LIAN when `params.dynamic` is set).
SearchResult lian_search(const Grid& grid, Cell start, Cell goal, const SearchParams& params,
                         const SearchHooks& hooks = {});

}  // namespace lian
