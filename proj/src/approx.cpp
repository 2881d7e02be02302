#include "veccon/approx.hpp"

#include <algorithm>
#include <stdexcept>

#include "veccon/errors.hpp"
#include "veccon/fans.hpp"

namespace veccon {
namespace {

long long deficiency_mask(const Instance& inst, const std::vector<char>& in_s,
                          const std::vector<char>& targets) {
  long long total = 0;
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    const int r = inst.requirements[v];
    if (in_s[v] || r == 0) continue;
    const int self = targets[v] ? 1 : 0;
    const int need = r - self;
    if (need <= 0) continue;
    total += need - count_disjoint_paths(inst.graph, v, targets, need);
  }
  return total;
}

}  // namespace

long long deficiency(const Instance& inst, const VertexSet& s) {
  std::vector<char> in_s(inst.vertex_count(), 0);
  std::vector<char> targets = inst.free_mask();
  for (Vertex v : s) {
    if (!inst.graph.contains(v)) throw InputError("deficiency: unknown vertex");
    in_s[v] = targets[v] = 1;
  }
  return deficiency_mask(inst, in_s, targets);
}

VertexSet greedy(const Instance& inst) {
  inst.validate();
  const int n = inst.vertex_count();
  std::vector<char> in_s(n, 0);
  std::vector<char> targets = inst.free_mask();
  VertexSet s;
  long long current = deficiency_mask(inst, in_s, targets);
  while (current > 0) {
    Vertex best = -1;
    long long best_value = current;
    for (Vertex u = 0; u < n; ++u) {
      if (in_s[u]) continue;
      const char was_target = targets[u];
      in_s[u] = targets[u] = 1;
      const long long value = deficiency_mask(inst, in_s, targets);
      in_s[u] = 0;
      targets[u] = was_target;
      if (value < best_value) {
        best_value = value;
        best = u;
      }
    }
    // Adding any unsatisfied vertex zeroes its own deficiency without
    // lowering anyone else's fan order, so progress is guaranteed.
    if (best < 0) throw std::logic_error("greedy: no vertex lowers the deficiency");
    in_s[best] = targets[best] = 1;
    s.push_back(best);
    current = best_value;
  }
  return normalize(s);
}

}  // namespace veccon
