#include "doctest.h"
#include "support/oracles.hpp"
#include "veccon/errors.hpp"
#include "veccon/generators.hpp"
#include "veccon/lowreq_solver.hpp"
#include "veccon/oracle.hpp"

using namespace veccon;
using oracle::brute_min_size;

TEST_CASE("low requirement examples") {
  const Instance star(oracle::star_graph(3), {1, 1, 1, 1});
  CHECK(solve_lowreq(star).size() == 1);
  CHECK(brute_min_size(star) == 1);

  const Instance c4(oracle::cycle_graph(4), {2, 2, 2, 2});
  const VertexSet s = solve_lowreq(c4);
  CHECK(s.size() == 2);
  CHECK(brute_min_size(c4) == 2);
  CHECK(is_feasible(c4, s));

  const Instance p4(oracle::path_graph(4), {1, 0, 0, 1});
  CHECK(solve_lowreq(p4).size() == 1);
  CHECK(brute_min_size(p4) == 1);

  CHECK(solve_lowreq(Instance(Graph(1), {1})).size() == 1);
  CHECK(solve_lowreq(Instance(Graph(1), {0})).empty());
}

TEST_CASE("low requirement preconditions") {
  CHECK_THROWS_AS(solve_lowreq(Instance(oracle::path_graph(3), {3, 0, 0})), InputError);
  CHECK_THROWS_AS(solve_lowreq(Instance(oracle::path_graph(3), {1, 1, 1}, {0})), InputError);
  CHECK_THROWS_AS(solve_lowreq(Instance(Graph(3, {{0, 1}}), {1, 1, 1})), InputError);
}

TEST_CASE("low requirement solver is exact and matches the hitting bound") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    const Graph g = gen_random_connected(n, 0.2 + 0.05 * static_cast<double>(seed % 5), seed);
    const Instance inst = gen_requirements(g, 2, seed * 7);
    const VertexSet s = solve_lowreq(inst);
    CHECK(is_feasible(inst, s));
    CHECK(static_cast<int>(s.size()) == brute_min_size(inst));
    const auto family = oracle::brute_violating(g, inst.requirements);
    CHECK(static_cast<int>(s.size()) == oracle::brute_hitting_size(family, n));
  }
}
