#include "veccon/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "veccon/errors.hpp"
#include "veccon/fans.hpp"

namespace veccon {

Instance::Instance(Graph g, std::vector<int> r, VertexSet free)
    : graph(std::move(g)), requirements(std::move(r)), free_set(std::move(free)) {
  normalize(free_set);
  validate();
}

int Instance::max_requirement() const {
  int best = 0;
  for (int x : requirements) best = std::max(best, x);
  return best;
}

std::vector<char> Instance::free_mask() const {
  std::vector<char> mask(graph.vertex_count(), 0);
  for (Vertex v : free_set) mask[v] = 1;
  return mask;
}

void Instance::validate() const {
  if (static_cast<int>(requirements.size()) != graph.vertex_count()) {
    throw InputError("requirement map size " + std::to_string(requirements.size()) +
                     " does not match vertex count " +
                     std::to_string(graph.vertex_count()));
  }
  for (std::size_t v = 0; v < requirements.size(); ++v) {
    if (requirements[v] < 0) {
      throw InputError("negative requirement at vertex " + std::to_string(v));
    }
  }
  if (!std::is_sorted(free_set.begin(), free_set.end()) ||
      std::adjacent_find(free_set.begin(), free_set.end()) != free_set.end()) {
    throw InputError("free set is not normalized");
  }
  for (Vertex v : free_set) {
    if (!graph.contains(v)) throw InputError("unknown free vertex " + std::to_string(v));
  }
}

Instance restrict_instance(const Instance& inst, const Subgraph& sub) {
  Instance out;
  out.graph = sub.graph;
  out.requirements.reserve(sub.to_parent.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    const Vertex p = sub.to_parent[i];
    out.requirements.push_back(inst.requirements[p]);
    if (inst.is_free(p)) out.free_set.push_back(static_cast<Vertex>(i));
  }
  return out;
}

int brute_cap() {
  if (const char* env = std::getenv("VECCON_BRUTE_CAP")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 64) {
      return static_cast<int>(value);
    }
  }
  return kDefaultBruteCap;
}

namespace {

std::vector<char> solution_targets(const Instance& inst, const VertexSet& s) {
  std::vector<char> mask = inst.free_mask();
  for (Vertex v : s) {
    if (!inst.graph.contains(v)) {
      throw InputError("solution references unknown vertex " + std::to_string(v));
    }
    mask[v] = 1;
  }
  return mask;
}

bool is_feasible_mask(const Instance& inst, const std::vector<char>& in_s,
                      const std::vector<char>& targets) {
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  // Degree bound first: it rejects most infeasible sets without any flow.
  for (Vertex v = 0; v < n; ++v) {
    if (!in_s[v] && inst.requirements[v] > g.degree(v) + (targets[v] ? 1 : 0)) return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!in_s[v] && !reaches(g, v, targets, inst.requirements[v])) return false;
  }
  return true;
}

}  // namespace

bool is_feasible(const Instance& inst, const VertexSet& s) {
  auto targets = solution_targets(inst, s);
  std::vector<char> in_s(inst.vertex_count(), 0);
  for (Vertex v : s) in_s[v] = 1;
  return is_feasible_mask(inst, in_s, targets);
}

std::optional<Vertex> first_violation(const Instance& inst, const VertexSet& s) {
  auto targets = solution_targets(inst, s);
  std::vector<char> in_s(inst.vertex_count(), 0);
  for (Vertex v : s) in_s[v] = 1;
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    if (!in_s[v] && !reaches(inst.graph, v, targets, inst.requirements[v])) return v;
  }
  return std::nullopt;
}

VertexSet brute_force_min(const Instance& inst, int cap) {
  if (cap < 0) cap = brute_cap();
  const int n = inst.vertex_count();
  if (n > cap) {
    throw SizeError("brute_force_min: " + std::to_string(n) + " vertices exceed cap " +
                    std::to_string(cap));
  }
  const auto free = inst.free_mask();
  // Vertices whose requirement exceeds any possible fan belong to every
  // feasible set; skipping combinations without them preserves the
  // lexicographic tie-break.
  std::vector<char> forced(n, 0);
  int forced_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (inst.requirements[v] > inst.graph.degree(v) + (free[v] ? 1 : 0)) {
      forced[v] = 1;
      ++forced_count;
    }
  }

  std::vector<char> in_s(n, 0);
  std::vector<char> targets(n, 0);
  for (int k = forced_count; k <= n; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::fill(in_s.begin(), in_s.end(), 0);
      for (int i : pick) in_s[i] = 1;
      bool has_forced = true;
      for (Vertex v = 0; v < n && has_forced; ++v) has_forced = !forced[v] || in_s[v];
      if (has_forced) {
        for (Vertex v = 0; v < n; ++v) targets[v] = in_s[v] || free[v];
        if (is_feasible_mask(inst, in_s, targets)) return VertexSet(pick.begin(), pick.end());
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // S = V is always feasible, so the loop returns before reaching here.
  return {};
}

namespace detail {

std::vector<Mask> neighbor_masks(const Graph& g) {
  if (g.vertex_count() > 64) throw SizeError("bitmask enumeration limited to 64 vertices");
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

}  // namespace detail

ViolatingFamily violating_family(const Graph& g, const std::vector<int>& r,
                                 bool minimal_only, int cap) {
  if (cap < 0) cap = brute_cap();
  const int n = g.vertex_count();
  if (n > cap) {
    throw SizeError("violating_family: " + std::to_string(n) + " vertices exceed cap " +
                    std::to_string(cap));
  }
  if (static_cast<int>(r.size()) != n) throw InputError("requirement map size mismatch");
  using detail::Mask;
  const auto adj = detail::neighbor_masks(g);

  std::vector<Mask> found;
  for_each_connected_set(g, [&](Mask x) {
    Mask boundary = 0;
    int top = 0;
    for (Mask rest = x; rest; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      boundary |= adj[v];
      top = std::max(top, r[v]);
    }
    boundary &= ~x;
    if (top > __builtin_popcountll(boundary)) found.push_back(x);
  });

  if (minimal_only) {
    std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
      const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
      return pa != pb ? pa < pb : a < b;
    });
    std::vector<Mask> kept;
    for (Mask x : found) {
      bool dominated = false;
      for (Mask k : kept) {
        if ((k & x) == k) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(x);
    }
    found = std::move(kept);
  }

  ViolatingFamily family;
  family.minimal_only = minimal_only;
  for (Mask x : found) {
    VertexSet set;
    for (Mask rest = x; rest; rest &= rest - 1) set.push_back(__builtin_ctzll(rest));
    family.sets.push_back(std::move(set));
  }
  std::sort(family.sets.begin(), family.sets.end());
  return family;
}

bool hits_all(const ViolatingFamily& family, const VertexSet& s) {
  for (const auto& x : family.sets) {
    bool hit = false;
    for (Vertex v : x) {
      if (contains(s, v)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<std::vector<int>> sets, int elements)
      : sets_(std::move(sets)),
        containing_(elements),
        chosen_(elements, 0),
        banned_(elements, 0),
        hits_(sets_.size(), 0) {
    for (int i = 0; i < static_cast<int>(sets_.size()); ++i) {
      for (int e : sets_[i]) containing_[e].push_back(i);
    }
  }

  std::vector<int> solve() {
    best_ = greedy();
    std::vector<int> current;
    branch(current);
    return best_;
  }

 private:
  std::vector<int> greedy() const {
    std::vector<int> hits(sets_.size(), 0);
    std::vector<int> picked;
    while (true) {
      int best_e = -1, best_gain = 0;
      for (int e = 0; e < static_cast<int>(containing_.size()); ++e) {
        int gain = 0;
        for (int s : containing_[e]) gain += hits[s] == 0;
        if (gain > best_gain) {
          best_gain = gain;
          best_e = e;
        }
      }
      if (best_e < 0) break;
      picked.push_back(best_e);
      for (int s : containing_[best_e]) ++hits[s];
    }
    return picked;
  }

  int available(int set) const {
    int count = 0;
    for (int e : sets_[set]) count += !banned_[e];
    return count;
  }

  // Size of a greedy packing of pairwise disjoint unhit sets.
  int lower_bound() {
    std::vector<char> marked(chosen_.size(), 0);
    int bound = 0;
    for (int i = 0; i < static_cast<int>(sets_.size()); ++i) {
      if (hits_[i]) continue;
      bool free_of_marks = true;
      for (int e : sets_[i]) {
        if (!banned_[e] && marked[e]) {
          free_of_marks = false;
          break;
        }
      }
      if (!free_of_marks) continue;
      ++bound;
      for (int e : sets_[i]) marked[e] = 1;
    }
    return bound;
  }

  void branch(std::vector<int>& current) {
    int pivot = -1, pivot_avail = 0;
    for (int i = 0; i < static_cast<int>(sets_.size()); ++i) {
      if (hits_[i]) continue;
      const int avail = available(i);
      if (avail == 0) return;
      if (pivot < 0 || avail < pivot_avail) {
        pivot = i;
        pivot_avail = avail;
      }
    }
    if (pivot < 0) {
      if (current.size() < best_.size()) best_ = current;
      return;
    }
    if (current.size() + lower_bound() >= best_.size()) return;

    std::vector<int> banned_here;
    for (int e : sets_[pivot]) {
      if (banned_[e]) continue;
      chosen_[e] = 1;
      current.push_back(e);
      for (int s : containing_[e]) ++hits_[s];
      branch(current);
      for (int s : containing_[e]) --hits_[s];
      current.pop_back();
      chosen_[e] = 0;
      banned_[e] = 1;
      banned_here.push_back(e);
      if (current.size() + 1 >= best_.size()) break;
    }
    for (int e : banned_here) banned_[e] = 0;
  }

  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> containing_;
  std::vector<char> chosen_;
  std::vector<char> banned_;
  std::vector<int> hits_;
  std::vector<int> best_;
};

}  // namespace

VertexSet min_hitting_set(const ViolatingFamily& family, const VertexSet& universe) {
  VertexSet elems = normalized(universe);
  std::unordered_map<Vertex, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i]] = i;

  std::vector<std::vector<int>> sets;
  for (const auto& x : family.sets) {
    if (x.empty()) throw InputError("min_hitting_set: family contains an empty set");
    std::vector<int> mapped;
    for (Vertex v : x) {
      auto it = index.find(v);
      if (it == index.end()) {
        throw InputError("min_hitting_set: vertex " + std::to_string(v) +
                         " lies outside the universe");
      }
      mapped.push_back(it->second);
    }
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    sets.push_back(std::move(mapped));
  }

  HittingSetSearch search(std::move(sets), static_cast<int>(elems.size()));
  VertexSet out;
  for (int e : search.solve()) out.push_back(elems[e]);
  return normalize(out);
}

}  // namespace veccon
