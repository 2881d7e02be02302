#include <cstdlib>

#include "doctest.h"
#include "support/oracles.hpp"
#include "veccon/errors.hpp"
#include "veccon/generators.hpp"
#include "veccon/oracle.hpp"

using namespace veccon;
using oracle::complete_graph;
using oracle::from_mask;
using oracle::path_graph;

namespace {

std::vector<oracle::Mask> masks_of(const ViolatingFamily& f) {
  std::vector<oracle::Mask> out;
  for (const auto& x : f.sets) out.push_back(oracle::to_mask(x));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet all_of(int n) {
  VertexSet u(n);
  std::iota(u.begin(), u.end(), 0);
  return u;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(path_graph(3), {1, 1}), InputError);
  CHECK_THROWS_AS(Instance(path_graph(3), {1, -1, 1}), InputError);
  CHECK_THROWS_AS(Instance(path_graph(3), {1, 1, 1}, {4}), InputError);
  const Instance ok(path_graph(3), {9, 0, 0}, {2, 0, 2});
  CHECK(ok.free_set == VertexSet{0, 2});
  CHECK(ok.max_requirement() == 9);
}

TEST_CASE("is_feasible examples") {
  const Instance p3(path_graph(3), {1, 1, 1});
  CHECK(is_feasible(p3, {1}));
  CHECK(oracle::brute_feasible(p3, {1}));
  const Instance k3(complete_graph(3), {2, 2, 2});
  CHECK_FALSE(is_feasible(k3, {0}));
  CHECK_FALSE(oracle::brute_feasible(k3, {0}));
  CHECK(first_violation(k3, {0}) == 1);
  CHECK(is_feasible(Instance(complete_graph(4), {0, 0, 0, 0}), {}));
  CHECK_FALSE(first_violation(p3, {1}).has_value());
}

TEST_CASE("brute_force_min examples") {
  const Instance k3(complete_graph(3), {2, 2, 2});
  CHECK(brute_force_min(k3).size() == static_cast<std::size_t>(oracle::brute_min_size(k3)));
  CHECK(brute_force_min(k3).size() == 2);
  CHECK(brute_force_min(k3) == VertexSet{0, 1});  // lexicographic tie-break
  const Instance p3(path_graph(3), {1, 1, 1});
  CHECK(brute_force_min(p3).size() == 1);
  CHECK(brute_force_min(p3) == VertexSet{0});
  CHECK(brute_force_min(Instance(path_graph(4), {0, 0, 0, 0})).empty());
}

TEST_CASE("brute_force_min cap") {
  const Instance big(path_graph(20), std::vector<int>(20, 1));
  CHECK_THROWS_AS(brute_force_min(big), SizeError);
  CHECK(brute_force_min(big, 20).size() == 1);
  setenv("VECCON_BRUTE_CAP", "20", 1);
  CHECK(brute_cap() == 20);
  CHECK(brute_force_min(big).size() == 1);
  unsetenv("VECCON_BRUTE_CAP");
  CHECK(brute_cap() == kDefaultBruteCap);
}

TEST_CASE("brute_force_min matches the path oracle with free vertices") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = gen_random_connected(6 + static_cast<int>(seed % 2), 0.4, seed);
    const Instance inst = gen_requirements(g, 4, seed + 100, 0.25);
    const VertexSet s = brute_force_min(inst);
    CHECK(is_feasible(inst, s));
    CHECK(static_cast<int>(s.size()) == oracle::brute_min_size(inst));
  }
}

TEST_CASE("violating family examples") {
  const auto p3 = violating_family(path_graph(3), {1, 1, 1});
  CHECK(p3.minimal_only);
  CHECK(p3.sets == std::vector<VertexSet>{{0, 1, 2}});

  const auto edge = violating_family(path_graph(2), {2, 0}, false);
  CHECK(std::find(edge.sets.begin(), edge.sets.end(), VertexSet{0}) != edge.sets.end());

  CHECK(violating_family(complete_graph(4), {0, 0, 0, 0}).sets.empty());
  CHECK_THROWS_AS(violating_family(path_graph(20), std::vector<int>(20, 1)), SizeError);
}

TEST_CASE("violating family agrees with a subset scan") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = gen_random_connected(5 + static_cast<int>(seed % 4), 0.35, seed);
    const Instance inst = gen_requirements(g, 4, seed * 3);
    auto expected = oracle::brute_violating(g, inst.requirements);
    std::sort(expected.begin(), expected.end());
    CHECK(masks_of(violating_family(g, inst.requirements, false)) == expected);

    const auto minimal = violating_family(g, inst.requirements, true);
    for (const auto& a : minimal.sets) {
      for (const auto& b : minimal.sets) {
        if (a != b) CHECK_FALSE(set_intersection(a, b) == a);
      }
    }
    // minimal members are exactly the inclusion-minimal scan results
    std::vector<oracle::Mask> mins;
    for (auto x : expected) {
      bool has_sub = false;
      for (auto y : expected) has_sub = has_sub || (y != x && (y & x) == y);
      if (!has_sub) mins.push_back(x);
    }
    CHECK(masks_of(minimal) == mins);
  }
}

TEST_CASE("connected set enumeration visits each set once") {
  const Graph g = gen_random_connected(9, 0.3, 5);
  std::vector<detail::Mask> seen;
  for_each_connected_set(g, [&](detail::Mask m) { seen.push_back(m); });
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  std::size_t expected = 0;
  for (oracle::Mask x = 1; x < (oracle::Mask{1} << 9); ++x) expected += oracle::induces_connected(g, x);
  CHECK(seen.size() == expected);
}

TEST_CASE("min hitting set") {
  ViolatingFamily f{{{0, 1}, {1, 2}}, false};
  CHECK(min_hitting_set(f, {0, 1, 2}) == VertexSet{1});
  CHECK(min_hitting_set(ViolatingFamily{}, {0, 1}).empty());
  CHECK(hits_all(f, {1}));
  CHECK_FALSE(hits_all(f, {0}));

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    SplitMix64 rng(seed);
    const int n = 6 + static_cast<int>(rng.below(7));
    ViolatingFamily fam;
    std::vector<oracle::Mask> masks;
    const int count = static_cast<int>(rng.below(12));
    for (int i = 0; i < count; ++i) {
      oracle::Mask m = 0;
      while (!m) m = rng.below(oracle::Mask{1} << n) & rng.below(oracle::Mask{1} << n);
      masks.push_back(m);
      fam.sets.push_back(from_mask(m));
    }
    const VertexSet h = min_hitting_set(fam, all_of(n));
    CHECK(hits_all(fam, h));
    CHECK(static_cast<int>(h.size()) == oracle::brute_hitting_size(masks, n));
  }
}

TEST_CASE("feasibility is monotone") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = gen_requirements(gen_random_connected(8, 0.35, seed), 3, seed, 0.2);
    const VertexSet s = brute_force_min(inst);
    for (Vertex u = 0; u < 8; ++u) CHECK(is_feasible(inst, set_union(s, {u})));
  }
}
