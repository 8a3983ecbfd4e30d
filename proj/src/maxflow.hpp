#pragma once

// Dinic maximum flow on integer capacities. Internal to the density module.

#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace rcx::detail {

class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed =
                 augment(source, sink, std::numeric_limits<std::int64_t>::max()))
        total += pushed;
    }
    return total;
  }

  /// Nodes reachable from source in the residual network after run().
  std::vector<bool> source_side(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a : adj_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.residual > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t residual;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<std::size_t> queue{source};
    level_[source] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t a : adj_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.residual > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[u] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(std::size_t u, std::size_t sink, std::int64_t limit) {
    if (u == sink) return limit;
    for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
      std::size_t a = adj_[u][i];
      Arc& arc = arcs_[a];
      if (arc.residual <= 0 || level_[arc.to] != level_[u] + 1) continue;
      std::int64_t got = augment(arc.to, sink, std::min(limit, arc.residual));
      if (got > 0) {
        arc.residual -= got;
        arcs_[a ^ 1].residual += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace rcx::detail
