#ifndef VECCON_GRAPH_HPP
#define VECCON_GRAPH_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace veccon {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet& normalize(VertexSet& set);
VertexSet normalized(VertexSet set);
bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// Undirected simple graph on vertices 0..n-1, immutable after construction.
///
/// Adjacency is stored in CSR form with each neighbor list sorted, so
/// has_edge is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws InputError on self-loops, parallel edges or out-of-range ids.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Induced subgraph plus the relabeling back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id, increasing
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& x);

/// N(X): vertices outside X with a neighbor in X. X must be non-empty.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted lexicographically
  VertexSet cut_vertices;
  /// Bipartite block tree. Node b < blocks.size() is a block; node
  /// blocks.size() + i is cut_vertices[i].
  std::vector<std::vector<int>> block_tree;
  /// Indices of blocks holding exactly one cut vertex. Empty when the
  /// graph is a single block.
  std::vector<int> leaf_blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_cut_vertex(Vertex v) const;
  /// The unique cut vertex of a leaf block.
  Vertex cut_vertex_of_leaf(int block) const;
};

/// Biconnected components via iterative Hopcroft-Tarjan. The graph must be
/// connected with at least one vertex.
BlockDecomposition block_decomposition(const Graph& g);

struct StructuralReport {
  bool is_connected = false;
  /// Connected, more than two vertices, and no cut vertex.
  bool is_biconnected = false;
  bool is_bipartite = false;
  int max_degree = 0;
  std::optional<int> girth;  // nullopt for forests
};

StructuralReport structural_checks(const Graph& g);

}  // namespace veccon

#endif  // VECCON_GRAPH_HPP
