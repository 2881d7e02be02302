#include "veccon/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "veccon/errors.hpp"

namespace veccon {
namespace {

void require_cubic(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("gadget source graph is empty");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw InputError("gadget source graph is not cubic: vertex " + std::to_string(v) +
                       " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (!is_connected(g)) throw InputError("gadget source graph is disconnected");
}

bool is_simplicial_role(RoleKind kind) {
  return kind == RoleKind::kOriginal || kind == RoleKind::kZSide;
}

}  // namespace

std::string role_name(RoleKind kind) {
  switch (kind) {
    case RoleKind::kOriginal:
      return "original";
    case RoleKind::kWSide:
      return "w_side";
    case RoleKind::kWMid:
      return "w_mid";
    case RoleKind::kZSide:
      return "z_side";
    case RoleKind::kSubdivision:
      return "subdivision";
  }
  return "unknown";
}

RoleKind role_from_name(const std::string& name) {
  for (RoleKind kind : {RoleKind::kOriginal, RoleKind::kWSide, RoleKind::kWMid,
                        RoleKind::kZSide, RoleKind::kSubdivision}) {
    if (role_name(kind) == name) return kind;
  }
  throw InputError("unknown gadget role '" + name + "'");
}

int GadgetMapping::core_vertex_count() const {
  return source.vertex_count() + 5 * source.edge_count();
}

GadgetMapping build_gadget(const Graph& g) {
  require_cubic(g);
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());

  GadgetMapping out;
  out.source = g;
  out.roles.resize(n + 5 * m);
  out.requirements.assign(n + 5 * m, 0);
  for (Vertex x = 0; x < n; ++x) out.roles[x] = {RoleKind::kOriginal, x, -1, -1};

  std::vector<Edge> gadget_edges;
  std::vector<std::vector<Vertex>> w_at(n);  // w-side vertices next to each x
  for (int i = 0; i < m; ++i) {
    const auto [x, y] = edges[i];
    const Vertex base = n + 5 * i;
    EdgeGadget eg{base, base + 1, base + 2, base + 3, base + 4};
    out.edge_index.push_back(eg);

    out.roles[eg.w_x] = {RoleKind::kWSide, x, i, -1};
    out.roles[eg.w_mid] = {RoleKind::kWMid, -1, i, -1};
    out.roles[eg.w_y] = {RoleKind::kWSide, y, i, -1};
    out.roles[eg.z_x] = {RoleKind::kZSide, x, i, -1};
    out.roles[eg.z_y] = {RoleKind::kZSide, y, i, -1};
    out.requirements[eg.w_x] = 4;
    out.requirements[eg.w_y] = 4;
    out.requirements[eg.w_mid] = 3;

    // 5-vertex path replacing xy
    gadget_edges.insert(gadget_edges.end(), {{x, eg.w_x}, {eg.w_x, eg.w_mid},
                                             {eg.w_mid, eg.w_y}, {eg.w_y, y}});
    // triangles w_x z_x w_e and w_e z_y w_y
    gadget_edges.insert(gadget_edges.end(), {{eg.w_x, eg.z_x}, {eg.z_x, eg.w_mid},
                                             {eg.w_mid, eg.z_y}, {eg.z_y, eg.w_y}});
    w_at[x].push_back(eg.w_x);
    w_at[y].push_back(eg.w_y);
  }
  for (Vertex x = 0; x < n; ++x) {
    const auto& w = w_at[x];
    gadget_edges.insert(gadget_edges.end(), {{w[0], w[1]}, {w[0], w[2]}, {w[1], w[2]}});
  }
  out.gadget = Graph(n + 5 * m, std::move(gadget_edges));
  return out;
}

GadgetMapping build_bipartite_gadget(const Graph& g, int k) {
  if (k < 1) throw InputError("build_bipartite_gadget: k must be at least 1");
  GadgetMapping base = build_gadget(g);
  const Graph& core = base.gadget;
  const int per_edge = 2 * k + 1;

  GadgetMapping out;
  out.source = base.source;
  out.edge_index = base.edge_index;
  out.subdivision_parameter = k;
  out.roles = base.roles;
  out.requirements = base.requirements;

  std::vector<Edge> edges;
  Vertex next_id = core.vertex_count();
  for (const auto& [a, b] : core.edges()) {
    // The unique simplicial vertex whose closed neighborhood holds both ends.
    Vertex owner = -1;
    auto consider = [&](Vertex c) {
      if (!is_simplicial_role(base.roles[c].kind)) return;
      if (owner >= 0 && owner != c) {
        throw std::logic_error("gadget edge lies in two simplicial cliques");
      }
      owner = c;
    };
    consider(a);
    consider(b);
    for (Vertex c : core.neighbors(a)) {
      if (core.has_edge(b, c)) consider(c);
    }
    if (owner < 0) throw std::logic_error("gadget edge lies in no simplicial clique");

    Vertex prev = a;
    for (int i = 0; i < per_edge; ++i) {
      const Vertex s = next_id++;
      out.roles.push_back({RoleKind::kSubdivision, -1, -1, owner});
      out.requirements.push_back(0);
      edges.emplace_back(prev, s);
      prev = s;
    }
    edges.emplace_back(prev, b);
  }
  out.gadget = Graph(next_id, std::move(edges));
  return out;
}

ViolatingFamily claim1_family(const GadgetMapping& m) {
  std::vector<VertexSet> absorbed(m.gadget.vertex_count());
  for (Vertex v = 0; v < m.gadget.vertex_count(); ++v) {
    if (m.roles[v].kind == RoleKind::kSubdivision) absorbed[m.roles[v].owner].push_back(v);
  }
  auto widen = [&](Vertex s) {
    VertexSet a = absorbed[s];
    a.push_back(s);
    return a;
  };
  auto join = [](VertexSet a, const VertexSet& b, Vertex mid) {
    a.insert(a.end(), b.begin(), b.end());
    a.push_back(mid);
    return normalize(a);
  };

  ViolatingFamily family;
  family.minimal_only = false;
  const auto& edges = m.source.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [x, y] = edges[i];
    const EdgeGadget& eg = m.edge_index[i];
    family.sets.push_back(join(widen(x), widen(eg.z_x), eg.w_x));
    family.sets.push_back(join(widen(eg.z_x), widen(eg.z_y), eg.w_mid));
    family.sets.push_back(join(widen(eg.z_y), widen(y), eg.w_y));
  }
  return family;
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
  for (const auto& [u, v] : g.edges()) {
    if (!contains(c, u) && !contains(c, v)) return false;
  }
  return true;
}

VertexSet solution_from_cover(const GadgetMapping& m, const VertexSet& cover) {
  VertexSet c = normalized(cover);
  for (Vertex v : c) {
    if (!m.source.contains(v)) throw InputError("cover references unknown source vertex");
  }
  if (!is_vertex_cover(m.source, c)) throw InputError("solution_from_cover: not a vertex cover");
  VertexSet s = c;
  const auto& edges = m.source.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool x_in = contains(c, edges[i].first);
    const bool y_in = contains(c, edges[i].second);
    // The z on the side of an uncovered endpoint covers that leg of the
    // doubly subdivided edge; with both ends in C either side works.
    s.push_back(x_in && !y_in ? m.edge_index[i].z_y : m.edge_index[i].z_x);
  }
  return normalize(s);
}

VertexSet normalize_solution(const GadgetMapping& m, const VertexSet& s) {
  const ViolatingFamily family = claim1_family(m);
  VertexSet current = normalized(s);
  for (Vertex v : current) {
    if (!m.gadget.contains(v)) throw InputError("solution references unknown gadget vertex");
  }
  if (!hits_all(family, current)) throw InputError("normalize_solution: infeasible solution");

  VertexSet out;
  for (Vertex v : current) {
    const Role& role = m.roles[v];
    switch (role.kind) {
      case RoleKind::kSubdivision:
        out.push_back(role.owner);
        break;
      case RoleKind::kWSide: {
        const EdgeGadget& eg = m.edge_index[role.source_edge];
        out.push_back(v == eg.w_x ? eg.z_x : eg.z_y);
        break;
      }
      case RoleKind::kWMid:
        out.push_back(m.edge_index[role.source_edge].z_x);
        break;
      default:
        out.push_back(v);
    }
  }
  normalize(out);
  if (!hits_all(family, out)) {
    throw std::logic_error("normalize_solution: replacement broke feasibility");
  }
  return out;
}

VertexSet extract_vertex_cover(const GadgetMapping& m, const VertexSet& s) {
  const VertexSet normal = normalize_solution(m, s);
  VertexSet cover;
  for (Vertex v : normal) {
    if (m.roles[v].kind == RoleKind::kOriginal) cover.push_back(v);
  }
  const auto& edges = m.source.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [x, y] = edges[i];
    if (contains(cover, x) || contains(cover, y)) continue;
    // Neither end chosen: both z-vertices of this edge are in the set, and
    // one of them pays for promoting x.
    cover.insert(std::upper_bound(cover.begin(), cover.end(), x), x);
  }
  return cover;
}

VertexSet exact_vertex_cover(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) {
    throw SizeError("exact_vertex_cover: " + std::to_string(n) + " vertices exceed cap 24");
  }
  using Mask = std::uint32_t;
  std::vector<Mask> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }

  Mask best = n == 0 ? 0 : (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  auto search = [&](auto& self, Mask taken, Mask removed) -> void {
    int pivot = -1, pivot_degree = 0, remaining_edges2 = 0;
    for (int v = 0; v < n; ++v) {
      if (removed >> v & 1) continue;
      const int d = std::popcount(adj[v] & ~removed);
      remaining_edges2 += d;
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot < 0) {
      if (std::popcount(taken) < std::popcount(best)) best = taken;
      return;
    }
    const int remaining_edges = remaining_edges2 / 2;
    const int bound = (remaining_edges + pivot_degree - 1) / pivot_degree;
    if (std::popcount(taken) + bound >= std::popcount(best)) return;
    const Mask bit = Mask{1} << pivot;
    self(self, taken | bit, removed | bit);
    const Mask nb = adj[pivot] & ~removed;
    self(self, taken | nb, removed | nb | bit);
  };
  search(search, 0, 0);

  VertexSet out;
  for (int v = 0; v < n; ++v) {
    if (best >> v & 1) out.push_back(v);
  }
  return out;
}

}  // namespace veccon
