#include "veccon/generators.hpp"

#include <algorithm>

#include "veccon/errors.hpp"

namespace veccon {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

int SplitMix64::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges.emplace_back(members[i], members[j]);
    }
  }
}

void add_cycle(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    edges.emplace_back(members[i], members[(i + 1) % members.size()]);
  }
}

// New block of `size` vertices: the anchor plus size - 1 fresh ids.
std::vector<Vertex> grow(int& count, Vertex anchor, int size) {
  std::vector<Vertex> members{anchor};
  for (int i = 1; i < size; ++i) members.push_back(count++);
  return members;
}

}  // namespace

Graph gen_block_graph(int n, std::uint64_t seed, int clique_max) {
  if (n < 1) throw InputError("gen_block_graph: n must be positive");
  if (clique_max < 2) throw InputError("gen_block_graph: clique_max must be at least 2");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    const Vertex anchor = static_cast<Vertex>(rng.below(count));
    const int size = rng.between(2, std::min(clique_max, n - count + 1));
    add_clique(edges, grow(count, anchor, size));
  }
  return Graph(n, std::move(edges));
}

Graph gen_block_cactus(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_block_cactus: n must be positive");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    const Vertex anchor = static_cast<Vertex>(rng.below(count));
    const int room = n - count + 1;
    if (room >= 4 && rng.below(2) == 0) {
      add_cycle(edges, grow(count, anchor, rng.between(4, std::min(6, room))));
    } else {
      add_clique(edges, grow(count, anchor, rng.between(2, std::min(4, room))));
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_random_connected(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gen_random_connected: p outside [0, 1]");
  if (n < 1) throw InputError("gen_random_connected: n must be positive");
  SplitMix64 rng(seed);
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.unit() < p) edges.emplace_back(u, v);
      }
    }
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw InputError("gen_random_connected: no connected draw within the retry budget");
}

Instance gen_requirements(const Graph& g, int r_max, std::uint64_t seed,
                          double free_fraction) {
  if (r_max < 0) throw InputError("gen_requirements: r_max must be non-negative");
  if (!(free_fraction >= 0.0 && free_fraction <= 1.0)) {
    throw InputError("gen_requirements: free_fraction outside [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<int> r(g.vertex_count());
  VertexSet free;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    r[v] = rng.between(0, r_max);
    if (rng.unit() < free_fraction) free.push_back(v);
  }
  return Instance(g, std::move(r), std::move(free));
}

std::vector<NamedGraph> cubic_catalog() {
  std::vector<NamedGraph> out;
  out.push_back({"K4", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
  out.push_back({"prism", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                    {0, 3}, {1, 4}, {2, 5}})});
  std::vector<Edge> k33;
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) k33.emplace_back(a, b);
  }
  out.push_back({"K33", Graph(6, std::move(k33))});
  std::vector<Edge> petersen;
  for (Vertex i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);          // outer cycle
    petersen.emplace_back(i, i + 5);                // spokes
    petersen.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  out.push_back({"petersen", Graph(10, std::move(petersen))});
  return out;
}

}  // namespace veccon
