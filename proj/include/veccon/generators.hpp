#ifndef VECCON_GENERATORS_HPP
#define VECCON_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "veccon/graph.hpp"
#include "veccon/instance.hpp"

namespace veccon {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// the mix13 finalizer. Bounded draws use rejection on the top of the range,
/// so streams are identical on every platform.
class SplitMix64 {
 public:
  static constexpr const char* kAlgorithm = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  /// Independent generator seeded from this stream.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Connected graph whose blocks are cliques of 2..clique_max vertices, grown
/// by gluing each new clique onto a random existing vertex.
Graph gen_block_graph(int n, std::uint64_t seed, int clique_max = 4);

/// Like gen_block_graph but roughly half the new blocks are cycles of length
/// 4..6 (and cliques of size 2..4 otherwise).
Graph gen_block_cactus(int n, std::uint64_t seed);

/// G(n, p) redrawn until connected. Throws InputError for p outside [0, 1]
/// or when no connected draw appears within the retry budget.
Graph gen_random_connected(int n, double p, std::uint64_t seed);

/// r(v) uniform in 0..r_max; each vertex free with probability free_fraction.
Instance gen_requirements(const Graph& g, int r_max, std::uint64_t seed,
                          double free_fraction = 0.0);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// K4, the triangular prism, K3,3 and the Petersen graph.
std::vector<NamedGraph> cubic_catalog();

}  // namespace veccon

#endif  // VECCON_GENERATORS_HPP
