#ifndef VECCON_APPROX_HPP
#define VECCON_APPROX_HPP

#include "veccon/graph.hpp"
#include "veccon/instance.hpp"

namespace veccon {

/// Sum over vertices of max(0, r(v) - sat(v, S)), where a vertex in S is
/// satisfied outright and any other vertex counts its fan order to S + F.
long long deficiency(const Instance& inst, const VertexSet& s);

/// Greedy cover: repeatedly adds the vertex with the largest deficiency
/// drop (smallest id on ties) until nothing is missing. Always feasible.
VertexSet greedy(const Instance& inst);

}  // namespace veccon

#endif  // VECCON_APPROX_HPP
