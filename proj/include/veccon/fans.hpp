#ifndef VECCON_FANS_HPP
#define VECCON_FANS_HPP

#include <vector>

#include "veccon/graph.hpp"

namespace veccon {

/// Paths from a center vertex to a target set, pairwise sharing only the
/// center. A single zero-length path {center} stands for the center itself
/// when it belongs to the target set.
struct Fan {
  Vertex center = -1;
  std::vector<std::vector<Vertex>> paths;

  int order() const { return static_cast<int>(paths.size()); }
};

/// A vertex set, not containing the query vertex, whose removal leaves no
/// path from the query vertex to a target outside the set.
struct CutWitness {
  VertexSet separator;
};

struct LinkResult {
  bool linked = false;
  Fan fan;         // filled when linked
  CutWitness cut;  // filled when not linked

  explicit operator bool() const { return linked; }
};

/// Maximum order of a fan from v to t. A center lying in t contributes one
/// zero-length path, so kappa(v, t + v) == kappa(v, t - v) + 1.
int kappa(const Graph& g, Vertex v, const VertexSet& t);

LinkResult is_k_linked(const Graph& g, Vertex v, const VertexSet& t, int k);

/// Mask-based variant used by the solvers. Counts vertex-disjoint paths from
/// v to vertices marked in is_target (v's own mark is ignored), stopping at
/// limit. No zero-length path is counted.
int count_disjoint_paths(const Graph& g, Vertex v, const std::vector<char>& is_target,
                         int limit);

/// Does v reach `need` disjoint paths to the marks, counting its own mark as
/// one zero-length path?
bool reaches(const Graph& g, Vertex v, const std::vector<char>& is_target, int need);

/// Independent certificate checks.
bool validate_fan(const Graph& g, const Fan& fan, const VertexSet& t);
bool validate_cut(const Graph& g, Vertex v, const VertexSet& t, const CutWitness& cut);

}  // namespace veccon

#endif  // VECCON_FANS_HPP
