#include "hyperconn/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace hyperconn {

FlowNetwork::FlowNetwork(int nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

void FlowNetwork::add_arc(int from, int to, int capacity) {
  adj_[from].push_back({to, static_cast<int>(adj_[to].size()), capacity, 0});
  adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, 0, 0});
}

bool FlowNetwork::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const Arc& a : adj_[u]) {
      if (a.capacity - a.flow > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[u] + 1;
        frontier.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::push(int node, int sink, int pushed) {
  if (node == sink || pushed == 0) return pushed;
  for (auto& i = next_[node]; i < adj_[node].size(); ++i) {
    Arc& a = adj_[node][i];
    if (level_[a.to] != level_[node] + 1 || a.capacity - a.flow <= 0) continue;
    const int got = push(a.to, sink, std::min(pushed, a.capacity - a.flow));
    if (got > 0) {
      a.flow += got;
      adj_[a.to][a.rev].flow -= got;
      return got;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  for (auto& arcs : adj_) {
    for (auto& a : arcs) a.flow = 0;
  }
  int total = 0;
  while (total < limit && build_levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (total < limit) {
      const int got = push(source, sink, limit - total);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

}  // namespace hyperconn
