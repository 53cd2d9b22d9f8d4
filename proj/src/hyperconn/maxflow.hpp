#pragma once

#include <limits>
#include <vector>

namespace hyperconn {

/// Dinic's algorithm on a directed network with integer capacities.
/// Used with unit capacities on hyperedge arcs, where each phase is O(E).
class FlowNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(int nodes);

  void add_arc(int from, int to, int capacity);

  /// Maximum flow from source to sink, stopping early once `limit` units
  /// have been routed. Resets all flow before running.
  int max_flow(int source, int sink, int limit = kInfinite);

 private:
  struct Arc {
    int to;
    int rev;
    int capacity;
    int flow;
  };

  bool build_levels(int source, int sink);
  int push(int node, int sink, int pushed);

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace hyperconn
