#include "doctest.h"
#include "support/oracles.hpp"
#include "veccon/block_solver.hpp"
#include "veccon/errors.hpp"
#include "veccon/generators.hpp"
#include "veccon/oracle.hpp"

using namespace veccon;
using oracle::brute_min_size;
using oracle::complete_graph;
using oracle::cycle_graph;
using oracle::path_graph;

namespace {

const Graph kBowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});

void check_optimal(const Instance& inst, const VertexSet& s) {
  CHECK(is_feasible(inst, s));
  CHECK(static_cast<int>(s.size()) == brute_min_size(inst));
}

}  // namespace

TEST_CASE("fsveccon examples") {
  const Instance p5(path_graph(5), {1, 1, 1, 1, 1});
  check_optimal(p5, fsveccon(p5));
  CHECK(fsveccon(p5).size() == 1);

  const Instance bowtie(kBowtie, {2, 2, 2, 2, 2});
  check_optimal(bowtie, fsveccon(bowtie));
  CHECK(fsveccon(bowtie).size() == 2);

  CHECK(fsveccon(Instance(kBowtie, {0, 0, 0, 0, 0})).empty());
  CHECK_THROWS_AS(fsveccon(Instance(Graph(3, {{0, 1}}), {1, 1, 1})), InputError);
}

TEST_CASE("fsveccon_biconnect dispatch") {
  const Instance k2(path_graph(2), {1, 1});
  check_optimal(k2, fsveccon_biconnect(k2));
  CHECK(fsveccon_biconnect(k2).size() == 1);
  // a block that is neither a clique nor a cycle falls back to enumeration
  const Graph k4_minus(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const Instance other(k4_minus, {3, 2, 2, 3}, {1});
  check_optimal(other, fsveccon_biconnect(other));
}

TEST_CASE("complete solver") {
  const Instance k4(complete_graph(4), {2, 2, 2, 2});
  check_optimal(k4, complete_solver(k4));
  CHECK(complete_solver(k4).size() == 2);

  const Instance k3(complete_graph(3), {0, 1, 1}, {0});
  CHECK(complete_solver(k3).empty());
  CHECK(oracle::brute_feasible(k3, {}));

  CHECK(complete_solver(Instance(complete_graph(5), std::vector<int>(5, 0))).empty());
  CHECK_THROWS_AS(complete_solver(Instance(cycle_graph(4), {1, 1, 1, 1})), InputError);

  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance inst = gen_requirements(complete_graph(2 + static_cast<int>(seed % 6)), 7,
                                           seed, 0.3);
    check_optimal(inst, complete_solver(inst));
  }
}

TEST_CASE("cycle solver") {
  const Instance c5(cycle_graph(5), {2, 2, 2, 2, 2});
  check_optimal(c5, cycle_solver(c5));
  CHECK(cycle_solver(c5).size() == 2);

  const Instance c4(cycle_graph(4), {3, 0, 0, 0});
  CHECK(cycle_solver(c4) == VertexSet{0});
  CHECK(brute_min_size(c4) == 1);

  CHECK(cycle_solver(Instance(cycle_graph(6), std::vector<int>(6, 0))).empty());
  CHECK_THROWS_AS(cycle_solver(Instance(path_graph(4), {1, 1, 1, 1})), InputError);

  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Instance inst = gen_requirements(cycle_graph(3 + static_cast<int>(seed % 6)), 4,
                                           seed, 0.2);
    check_optimal(inst, cycle_solver(inst));
  }
}

TEST_CASE("block cactus examples") {
  const Instance star(oracle::star_graph(3), {1, 1, 1, 1});
  CHECK(solve_block_cactus(star) == VertexSet{0});
  CHECK(brute_min_size(star) == 1);

  const Graph tail(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const Instance tailed(tail, {1, 1, 1, 1, 1});
  check_optimal(tailed, solve_block_cactus(tailed));
  CHECK(solve_block_cactus(tailed).size() == 1);

  CHECK(solve_block_cactus(Instance(Graph(1), {0})).empty());

  const Graph k4_minus(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(solve_block_cactus(Instance(k4_minus, {1, 1, 1, 1})), ClassificationError);
}

TEST_CASE("classification") {
  CHECK(classify_block(complete_graph(4)) == BlockKind::kClique);
  CHECK(classify_block(path_graph(2)) == BlockKind::kClique);
  CHECK(classify_block(cycle_graph(5)) == BlockKind::kCycle);
  CHECK(classify_block(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})) == BlockKind::kOther);
  CHECK(is_block_graph(kBowtie));
  CHECK(is_block_graph(gen_block_graph(30, 9)));
  CHECK_FALSE(is_block_graph(cycle_graph(4)));
  CHECK(is_block_cactus(cycle_graph(4)));
  CHECK(is_block_cactus(gen_block_cactus(30, 9)));
}

TEST_CASE("fsveccon is exact on random block graphs and cacti") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 9);
    const Graph g = seed % 2 ? gen_block_graph(n, seed) : gen_block_cactus(n, seed);
    const Instance inst = gen_requirements(g, 4, seed * 13, 0.25);
    check_optimal(inst, fsveccon(inst));
  }
}

TEST_CASE("fsveccon with a general block is still exact") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = gen_random_connected(7, 0.3, seed);
    const Instance inst = gen_requirements(g, 3, seed, 0.2);
    check_optimal(inst, fsveccon(inst));
  }
}
