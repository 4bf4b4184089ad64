#include "paclab/oig/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace paclab::oig {

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to,
                              std::int64_t cap) {
  std::size_t id = arcs_.size();
  head_[from].push_back(id);
  arcs_.push_back({to, cap});
  head_[to].push_back(id + 1);
  arcs_.push_back({from, 0});
  return id;
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  level_.assign(head_.size(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t limit) {
  if (v == t || limit == 0) return limit;
  std::int64_t pushed = 0;
  for (std::size_t& i = iter_[v]; i < head_[v].size(); ++i) {
    std::size_t id = head_[v][i];
    Arc& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    std::int64_t got = dfs(a.to, t, std::min(limit - pushed, a.cap));
    if (got == 0) {
      level_[a.to] = -1;
      continue;
    }
    a.cap -= got;
    arcs_[id ^ 1].cap += got;
    pushed += got;
    if (pushed == limit) break;
  }
  return pushed;
}

std::int64_t MaxFlow::run(std::size_t s, std::size_t t) {
  std::int64_t total = 0;
  while (bfs(s, t)) {
    iter_.assign(head_.size(), 0);
    total += dfs(s, t, std::numeric_limits<std::int64_t>::max());
  }
  return total;
}

std::vector<char> MaxFlow::min_cut_side(std::size_t s) const {
  std::vector<char> side(head_.size(), 0);
  std::queue<std::size_t> q;
  side[s] = 1;
  q.push(s);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !side[a.to]) {
        side[a.to] = 1;
        q.push(a.to);
      }
    }
  }
  return side;
}

}  // namespace paclab::oig
