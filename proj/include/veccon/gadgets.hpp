#ifndef VECCON_GADGETS_HPP
#define VECCON_GADGETS_HPP

#include <string>
#include <vector>

#include "veccon/graph.hpp"
#include "veccon/instance.hpp"
#include "veccon/oracle.hpp"

namespace veccon {

// Reduction from vertex cover on cubic graphs. Every source edge e = xy
// (x < y) becomes the path x - w_x - w_e - w_y - y with triangles w_x z_x w_e
// and w_e z_y w_y glued on top, and the three w-vertices next to each source
// vertex form a triangle. Requirements are 4 on w_x, w_y and 3 on w_e.

enum class RoleKind { kOriginal, kWSide, kWMid, kZSide, kSubdivision };

struct Role {
  RoleKind kind = RoleKind::kOriginal;
  Vertex source_vertex = -1;  // original, w_side, z_side
  int source_edge = -1;       // w_side, w_mid, z_side
  Vertex owner = -1;          // subdivision: simplicial vertex it hangs off
};

/// Gadget ids of the five vertices created for one source edge.
struct EdgeGadget {
  Vertex w_x = -1;
  Vertex w_mid = -1;
  Vertex w_y = -1;
  Vertex z_x = -1;
  Vertex z_y = -1;
};

struct GadgetMapping {
  Graph source;
  Graph gadget;
  std::vector<int> requirements;
  std::vector<Role> roles;
  std::vector<EdgeGadget> edge_index;  // parallel to source.edges()
  int subdivision_parameter = 0;       // k of the 2k+1 subdivision, 0 if none

  Instance instance() const { return Instance(gadget, requirements); }
  /// Number of vertices that existed before subdivision.
  int core_vertex_count() const;
};

std::string role_name(RoleKind kind);
RoleKind role_from_name(const std::string& name);

GadgetMapping build_gadget(const Graph& g);

/// Same gadget with every edge subdivided 2k+1 times. New vertices have
/// requirement 0 and remember the simplicial vertex whose clique contained
/// the edge they were inserted on.
GadgetMapping build_bipartite_gadget(const Graph& g, int k);

/// Three sets per source edge; a set S is feasible for the gadget instance
/// iff it meets all of them. On subdivided gadgets each simplicial vertex s
/// is widened to s plus the subdivision vertices it owns.
ViolatingFamily claim1_family(const GadgetMapping& m);

/// Cover C plus one z-vertex per edge, on the side of an endpoint outside C
/// (the smaller endpoint's side when both are in C).
VertexSet solution_from_cover(const GadgetMapping& m, const VertexSet& cover);

/// Rewrites a feasible set so it uses only original and z-vertices, never
/// growing it. Subdivision vertices move to their owner, w-vertices to the
/// adjacent z-vertex.
VertexSet normalize_solution(const GadgetMapping& m, const VertexSet& s);

/// Vertex cover of the source with |C| <= |S| - |E(source)|.
VertexSet extract_vertex_cover(const GadgetMapping& m, const VertexSet& s);

bool is_vertex_cover(const Graph& g, const VertexSet& c);

/// Minimum vertex cover by branch and bound on a maximum-degree vertex.
/// Throws SizeError above 24 vertices.
VertexSet exact_vertex_cover(const Graph& g);

}  // namespace veccon

#endif  // VECCON_GADGETS_HPP
