#ifndef VECCON_INSTANCE_HPP
#define VECCON_INSTANCE_HPP

#include <vector>

#include "veccon/graph.hpp"

namespace veccon {

/// Graph, per-vertex requirement and free set. Requirements may exceed the
/// vertex degree; such vertices can only be satisfied by joining the
/// solution.
struct Instance {
  Graph graph;
  std::vector<int> requirements;
  VertexSet free_set;

  Instance() = default;
  Instance(Graph g, std::vector<int> r, VertexSet free = {});

  int vertex_count() const { return graph.vertex_count(); }
  int requirement(Vertex v) const { return requirements[v]; }
  /// Largest requirement, 0 for the empty graph.
  int max_requirement() const;
  bool is_free(Vertex v) const { return contains(free_set, v); }
  std::vector<char> free_mask() const;

  /// Throws InputError unless requirements cover every vertex, are
  /// non-negative, and the free set is a normalized subset of V.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Restriction of an instance to an induced subgraph; requirements and free
/// set are carried over and relabeled.
Instance restrict_instance(const Instance& inst, const Subgraph& sub);

}  // namespace veccon

#endif  // VECCON_INSTANCE_HPP
