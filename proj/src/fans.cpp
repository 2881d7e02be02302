#include "veccon/fans.hpp"

#include <algorithm>
#include <string>

#include "veccon/errors.hpp"

namespace veccon {
namespace {

constexpr int kNone = -1;
constexpr int kSink = -2;

// Scratch arrays reused across calls on the same thread. Epoch stamps make
// resetting O(1), so a query only pays for the part of the graph it touches.
struct Workspace {
  std::vector<unsigned> flow_stamp;
  std::vector<int> prev;
  std::vector<int> next;
  std::vector<unsigned> seen_stamp;
  std::vector<int> parent_state;
  std::vector<int> queue;
  unsigned flow_epoch = 0;
  unsigned bfs_epoch = 0;

  void ensure(int n) {
    const std::size_t states = 2 * static_cast<std::size_t>(n) + 1;
    if (flow_stamp.size() < static_cast<std::size_t>(n)) {
      flow_stamp.assign(n, 0);
      prev.assign(n, kNone);
      next.assign(n, kNone);
      flow_epoch = 0;
    }
    if (seen_stamp.size() < states) {
      seen_stamp.assign(states, 0);
      parent_state.assign(states, -1);
      bfs_epoch = 0;
    }
  }

  void new_flow() {
    if (++flow_epoch == 0) {
      std::fill(flow_stamp.begin(), flow_stamp.end(), 0);
      flow_epoch = 1;
    }
  }

  void new_search() {
    if (++bfs_epoch == 0) {
      std::fill(seen_stamp.begin(), seen_stamp.end(), 0);
      bfs_epoch = 1;
    }
  }
};

thread_local Workspace workspace;

// Unit vertex capacities on every vertex but the source; each vertex u is
// split into in(u) = 2u and out(u) = 2u + 1, edge and sink arcs are
// uncapacitated so every minimum cut consists of split arcs only.
class PathFlow {
 public:
  PathFlow(const Graph& g, Vertex source, const std::vector<char>& is_target)
      : g_(g), source_(source), is_target_(is_target), ws_(workspace) {
    ws_.ensure(g.vertex_count());
    ws_.new_flow();
    sink_ = 2 * g.vertex_count();
  }

  bool augment() {
    ws_.new_search();
    ws_.queue.clear();
    visit(out(source_), -1);
    for (std::size_t head = 0; head < ws_.queue.size(); ++head) {
      const int state = ws_.queue[head];
      const Vertex u = state / 2;
      if (state & 1) {
        for (Vertex w : g_.neighbors(u)) {
          if (w != source_) visit(in(w), state);
        }
        if (u != source_) {
          if (is_target_[u]) {
            ws_.parent_state[sink_] = state;
            push_flow();
            return true;
          }
          if (used(u)) visit(in(u), state);
        }
      } else if (!used(u)) {
        visit(out(u), state);
      } else if (prev(u) != source_) {
        visit(out(prev(u)), state);
      }
    }
    return false;
  }

  int value() const { return value_; }

  std::vector<std::vector<Vertex>> paths() const {
    std::vector<std::vector<Vertex>> out_paths;
    for (Vertex w : g_.neighbors(source_)) {
      if (prev(w) != source_) continue;
      std::vector<Vertex> path{source_, w};
      Vertex cur = w;
      while (!is_target_[cur]) {
        cur = next(cur);
        path.push_back(cur);
      }
      out_paths.push_back(std::move(path));
    }
    return out_paths;
  }

  // Vertices whose split arc crosses the last search's reachable frontier.
  VertexSet separator() const {
    VertexSet sep;
    for (Vertex u = 0; u < g_.vertex_count(); ++u) {
      if (u != source_ && seen(in(u)) && !seen(out(u))) sep.push_back(u);
    }
    return sep;
  }

 private:
  static int in(Vertex u) { return 2 * u; }
  static int out(Vertex u) { return 2 * u + 1; }

  int prev(Vertex u) const { return ws_.flow_stamp[u] == ws_.flow_epoch ? ws_.prev[u] : kNone; }
  int next(Vertex u) const { return ws_.flow_stamp[u] == ws_.flow_epoch ? ws_.next[u] : kNone; }
  bool used(Vertex u) const { return prev(u) != kNone; }
  bool seen(int state) const { return ws_.seen_stamp[state] == ws_.bfs_epoch; }

  void touch(Vertex u) {
    if (ws_.flow_stamp[u] != ws_.flow_epoch) {
      ws_.flow_stamp[u] = ws_.flow_epoch;
      ws_.prev[u] = kNone;
      ws_.next[u] = kNone;
    }
  }

  void visit(int state, int from) {
    if (seen(state)) return;
    ws_.seen_stamp[state] = ws_.bfs_epoch;
    ws_.parent_state[state] = from;
    ws_.queue.push_back(state);
  }

  void push_flow() {
    std::vector<int> chain;
    for (int s = sink_; s != -1; s = ws_.parent_state[s]) chain.push_back(s);
    std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const int a = chain[i];
      const int b = chain[i + 1];
      const Vertex ua = a / 2;
      if (b == sink_) {
        touch(ua);
        ws_.next[ua] = kSink;
        continue;
      }
      const Vertex ub = b / 2;
      if (ua == ub) continue;  // split arc, implied by prev/next
      if (a & 1) {
        // forward along edge ua -> ub
        if (ua != source_) {
          touch(ua);
          ws_.next[ua] = ub;
        }
        touch(ub);
        ws_.prev[ub] = ua;
      } else {
        // cancel flow on edge ub -> ua
        if (ub != source_ && next(ub) == ua) ws_.next[ub] = kNone;
        if (prev(ua) == ub) ws_.prev[ua] = kNone;
      }
    }
    ++value_;
  }

  const Graph& g_;
  Vertex source_;
  const std::vector<char>& is_target_;
  Workspace& ws_;
  int sink_ = 0;
  int value_ = 0;
};

std::vector<char> target_mask(const Graph& g, const VertexSet& t) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (Vertex u : t) {
    if (!g.contains(u)) throw InputError("unknown target vertex " + std::to_string(u));
    mask[u] = 1;
  }
  return mask;
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
}

}  // namespace

int count_disjoint_paths(const Graph& g, Vertex v, const std::vector<char>& is_target,
                         int limit) {
  limit = std::min(limit, g.degree(v));
  if (limit <= 0) return 0;
  PathFlow flow(g, v, is_target);
  while (flow.value() < limit && flow.augment()) {
  }
  return flow.value();
}

bool reaches(const Graph& g, Vertex v, const std::vector<char>& is_target, int need) {
  if (is_target[v]) --need;
  if (need <= 0) return true;
  if (g.degree(v) < need) return false;
  return count_disjoint_paths(g, v, is_target, need) >= need;
}

int kappa(const Graph& g, Vertex v, const VertexSet& t) {
  require_vertex(g, v);
  auto mask = target_mask(g, t);
  const int self = mask[v] ? 1 : 0;
  return self + count_disjoint_paths(g, v, mask, g.degree(v));
}

LinkResult is_k_linked(const Graph& g, Vertex v, const VertexSet& t, int k) {
  if (k < 0) throw InputError("is_k_linked: negative k");
  require_vertex(g, v);
  auto mask = target_mask(g, t);

  LinkResult result;
  result.fan.center = v;
  if (k == 0) {
    result.linked = true;
    return result;
  }
  const bool self = mask[v] != 0;
  const int need = k - (self ? 1 : 0);
  if (self) result.fan.paths.push_back({v});

  PathFlow flow(g, v, mask);
  while (flow.value() < need && flow.augment()) {
  }
  if (flow.value() >= need) {
    result.linked = true;
    for (auto& p : flow.paths()) result.fan.paths.push_back(std::move(p));
    return result;
  }
  result.fan.paths.clear();
  result.cut.separator = flow.separator();
  return result;
}

bool validate_fan(const Graph& g, const Fan& fan, const VertexSet& t) {
  if (!g.contains(fan.center)) return false;
  std::vector<char> used(g.vertex_count(), 0);
  int zero_length = 0;
  for (const auto& path : fan.paths) {
    if (path.empty() || path.front() != fan.center) return false;
    if (!contains(t, path.back())) return false;
    if (path.size() == 1) {
      ++zero_length;
      continue;
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Vertex u = path[i];
      if (!g.contains(u) || u == fan.center || used[u]) return false;
      if (!g.has_edge(path[i - 1], u)) return false;
      used[u] = 1;
    }
  }
  return zero_length <= 1;
}

bool validate_cut(const Graph& g, Vertex v, const VertexSet& t, const CutWitness& cut) {
  if (!g.contains(v) || contains(cut.separator, v)) return false;
  std::vector<char> blocked(g.vertex_count(), 0);
  for (Vertex u : cut.separator) {
    if (!g.contains(u)) return false;
    blocked[u] = 1;
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (u != v && contains(t, u)) return false;
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace veccon
