#ifndef VECCON_ORACLE_HPP
#define VECCON_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "veccon/graph.hpp"
#include "veccon/instance.hpp"

namespace veccon {

/// Default vertex cap for the exhaustive routines. VECCON_BRUTE_CAP in the
/// environment overrides it.
inline constexpr int kDefaultBruteCap = 16;
int brute_cap();

/// Every vertex outside s is r(v)-linked to s + F.
bool is_feasible(const Instance& inst, const VertexSet& s);

/// Smallest-id vertex outside s that is not r(v)-linked to s + F.
std::optional<Vertex> first_violation(const Instance& inst, const VertexSet& s);

/// Minimum feasible set by enumerating subsets by size, then
/// lexicographically. Throws SizeError above the cap.
VertexSet brute_force_min(const Instance& inst, int cap = -1);

/// Connected sets X with R(X) > |N(X)|. Every feasible set must meet each
/// member, and meeting all of them is also sufficient.
struct ViolatingFamily {
  std::vector<VertexSet> sets;
  bool minimal_only = false;
};

/// Requirement-free instances only (F is not part of the characterization).
ViolatingFamily violating_family(const Graph& g, const std::vector<int>& r,
                                 bool minimal_only = true, int cap = -1);

/// Calls visit(mask) once per non-empty connected vertex set of g. Requires
/// vertex_count() <= 64.
template <typename Visit>
void for_each_connected_set(const Graph& g, Visit&& visit);

/// Exact minimum hitting set over `universe` by branch and bound.
VertexSet min_hitting_set(const ViolatingFamily& family, const VertexSet& universe);

bool hits_all(const ViolatingFamily& family, const VertexSet& s);

// ---------------------------------------------------------------------------

namespace detail {

using Mask = std::uint64_t;

std::vector<Mask> neighbor_masks(const Graph& g);

template <typename Visit>
void extend_connected(const std::vector<Mask>& adj, Mask current, Mask extension,
                      Mask forbidden, Visit& visit) {
  visit(current);
  while (extension) {
    const int w = __builtin_ctzll(extension);
    extension &= extension - 1;
    const Mask bit = Mask{1} << w;
    // Vertices adjacent to w but not to the current set become new
    // candidates; everything already offered stays excluded downstream.
    const Mask fresh = adj[w] & ~forbidden & ~current;
    extend_connected(adj, current | bit, extension | fresh, forbidden | fresh | bit,
                     visit);
  }
}

}  // namespace detail

template <typename Visit>
void for_each_connected_set(const Graph& g, Visit&& visit) {
  const int n = g.vertex_count();
  const auto adj = detail::neighbor_masks(g);
  for (int seed = 0; seed < n; ++seed) {
    const detail::Mask seed_bit = detail::Mask{1} << seed;
    // Vertices below the seed never join, so each set is produced from its
    // minimum vertex exactly once.
    const detail::Mask below = seed_bit - 1;
    const detail::Mask ext = adj[seed] & ~below;
    detail::extend_connected(adj, seed_bit, ext, below | seed_bit | ext, visit);
  }
}

}  // namespace veccon

#endif  // VECCON_ORACLE_HPP
