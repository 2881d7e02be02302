#include "veccon/graph.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <string>

#include "veccon/errors.hpp"

namespace veccon {

VertexSet& normalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

VertexSet normalized(VertexSet set) {
  normalize(set);
  return set;
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references an unknown vertex");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw InputError("parallel edge (" + std::to_string(dup->first) + ", " +
                     std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);

  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(offsets_[n_]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  // Edges are sorted by (u, v), so lists of larger endpoints are already
  // sorted but lists receiving both roles are not.
  for (int v = 0; v < n_; ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  VertexSet keep = normalized(x);
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    if (!g.contains(keep[i])) {
      throw InputError("induced_subgraph: unknown vertex " + std::to_string(keep[i]));
    }
    local[keep[i]] = i;
  }
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && local[w] >= 0) edges.emplace_back(local[u], local[w]);
    }
  }
  return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw InputError("open_neighborhood: empty vertex set");
  std::vector<char> in_x(g.vertex_count(), 0);
  for (Vertex v : x) {
    if (!g.contains(v)) {
      throw InputError("open_neighborhood: unknown vertex " + std::to_string(v));
    }
    in_x[v] = 1;
  }
  VertexSet out;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_x[w]) out.push_back(w);
    }
  }
  return normalize(out);
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_complete(const Graph& g) {
  const long long n = g.vertex_count();
  return n >= 1 && g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
  return contains(cut_vertices, v);
}

Vertex BlockDecomposition::cut_vertex_of_leaf(int block) const {
  for (Vertex v : blocks[block]) {
    if (is_cut_vertex(v)) return v;
  }
  throw InputError("block " + std::to_string(block) + " has no cut vertex");
}

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw InputError("block_decomposition: empty graph");
  if (!is_connected(g)) throw InputError("block_decomposition: graph is disconnected");

  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back({0});
    out.block_tree.resize(1);
    return out;
  }

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_index(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Vertex> dfs{0};
  int clock = 0;
  disc[0] = low[0] = clock++;

  while (!dfs.empty()) {
    Vertex v = dfs.back();
    auto nb = g.neighbors(v);
    if (next_index[v] < static_cast<int>(nb.size())) {
      Vertex w = nb[next_index[v]++];
      if (disc[w] < 0) {
        edge_stack.emplace_back(v, w);
        parent[w] = v;
        disc[w] = low[w] = clock++;
        dfs.push_back(w);
      } else if (w != parent[v] && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    dfs.pop_back();
    Vertex p = parent[v];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      VertexSet block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e == Edge{p, v}) break;
      }
      out.blocks.push_back(std::move(normalize(block)));
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end());
  std::vector<int> membership(n, 0);
  for (const auto& b : out.blocks) {
    for (Vertex v : b) ++membership[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (membership[v] >= 2) out.cut_vertices.push_back(v);
  }

  const int nb = out.block_count();
  out.block_tree.assign(nb + out.cut_vertices.size(), {});
  for (int b = 0; b < nb; ++b) {
    int cuts = 0;
    for (Vertex v : out.blocks[b]) {
      auto it = std::lower_bound(out.cut_vertices.begin(), out.cut_vertices.end(), v);
      if (it == out.cut_vertices.end() || *it != v) continue;
      int node = nb + static_cast<int>(it - out.cut_vertices.begin());
      out.block_tree[b].push_back(node);
      out.block_tree[node].push_back(b);
      ++cuts;
    }
    if (cuts == 1) out.leaf_blocks.push_back(b);
  }
  return out;
}

namespace {

bool two_colorable(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// BFS from every vertex; the shortest cycle through the root closes on the
// first non-tree edge seen at the smallest depth.
std::optional<int> compute_girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue = {};
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (best >= 0 && 2 * dist[v] >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (w != parent[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace

StructuralReport structural_checks(const Graph& g) {
  StructuralReport report;
  report.is_connected = is_connected(g);
  if (report.is_connected && g.vertex_count() > 2) {
    report.is_biconnected = block_decomposition(g).block_count() == 1;
  }
  report.is_bipartite = two_colorable(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    report.max_degree = std::max(report.max_degree, g.degree(v));
  }
  report.girth = compute_girth(g);
  return report;
}

}  // namespace veccon
