#pragma once

#include <cstdint>
#include <vector>

namespace paclab::oig {

// Dinic max flow on int64 capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n) : head_(n) {}

  // Returns the arc id; the paired reverse arc is id ^ 1.
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t cap);

  std::int64_t run(std::size_t s, std::size_t t);

  // Flow pushed through arc `id` after run(): the reverse arc's residual.
  std::int64_t flow_on(std::size_t id) const { return arcs_[id ^ 1].cap; }

  // Vertices reachable from s in the residual graph after run(); the source
  // side of a minimum cut.
  std::vector<char> min_cut_side(std::size_t s) const;

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t);
  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t limit);

  std::vector<std::vector<std::size_t>> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace paclab::oig
