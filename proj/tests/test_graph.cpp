#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "veccon/errors.hpp"
#include "veccon/generators.hpp"
#include "veccon/graph.hpp"

using namespace veccon;
using oracle::complete_graph;
using oracle::cycle_graph;
using oracle::path_graph;

namespace {

Graph triangle_with_pendant() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("graph rejects loops, parallel edges and unknown ids") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  const Graph g(3, {{2, 0}, {1, 2}});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(g.degree(2) == 2);
}

TEST_CASE("induced subgraph") {
  const Graph k4 = complete_graph(4);
  CHECK(induced_subgraph(k4, {0, 1, 2, 3}).graph == k4);

  const Subgraph ends = induced_subgraph(path_graph(3), {0, 2});
  CHECK(ends.graph.vertex_count() == 2);
  CHECK(ends.graph.edge_count() == 0);
  CHECK(ends.to_parent == std::vector<Vertex>{0, 2});

  const Subgraph tri = induced_subgraph(triangle_with_pendant(), {0, 1, 2});
  CHECK(tri.graph == complete_graph(3));

  CHECK_THROWS_AS(induced_subgraph(k4, {0, 7}), InputError);
}

TEST_CASE("open neighborhood") {
  const Graph p3 = path_graph(3);
  CHECK(open_neighborhood(p3, {0}) == VertexSet{1});
  CHECK(open_neighborhood(p3, {0, 1, 2}).empty());
  CHECK(open_neighborhood(cycle_graph(4), {0}) == VertexSet{1, 3});
  CHECK_THROWS_AS(open_neighborhood(p3, {}), InputError);

  const Graph g = gen_random_connected(9, 0.35, 11);
  for (Vertex a = 0; a < 9; ++a) {
    for (Vertex b = a; b < 9; b += 2) {
      const VertexSet x = normalized({a, b});
      CHECK(set_intersection(open_neighborhood(g, x), x).empty());
    }
  }
}

TEST_CASE("block decomposition on small graphs") {
  const auto p3 = block_decomposition(path_graph(3));
  CHECK(p3.blocks == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(p3.cut_vertices == VertexSet{1});
  CHECK(p3.leaf_blocks.size() == 2);

  const auto k4 = block_decomposition(complete_graph(4));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.cut_vertices.empty());
  CHECK(k4.leaf_blocks.empty());

  const auto tp = block_decomposition(triangle_with_pendant());
  CHECK(tp.blocks == std::vector<VertexSet>{{0, 1, 2}, {2, 3}});
  CHECK(tp.cut_vertices == VertexSet{2});
  CHECK(tp.is_cut_vertex(2));
  CHECK(tp.cut_vertex_of_leaf(0) == 2);

  const auto single = block_decomposition(Graph(1));
  CHECK(single.blocks == std::vector<VertexSet>{{0}});

  CHECK_THROWS_AS(block_decomposition(Graph(2)), InputError);
  CHECK_THROWS_AS(block_decomposition(Graph(0)), InputError);
}

TEST_CASE("block decomposition invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = gen_random_connected(4 + static_cast<int>(seed % 9), 0.25, seed);
    const auto bd = block_decomposition(g);

    // every edge in exactly one block
    for (const auto& [u, v] : g.edges()) {
      int holders = 0;
      for (const auto& b : bd.blocks) holders += contains(b, u) && contains(b, v);
      CHECK(holders == 1);
    }
    // cut vertex iff in two or more blocks; also matches removal test
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      int count = 0;
      for (const auto& b : bd.blocks) count += contains(b, v);
      CHECK(bd.is_cut_vertex(v) == (count >= 2));
      VertexSet rest;
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (u != v) rest.push_back(u);
      }
      const bool separates = !rest.empty() && !is_connected(induced_subgraph(g, rest).graph);
      CHECK(bd.is_cut_vertex(v) == separates);
    }
    // blocks are biconnected or a bridge
    for (const auto& b : bd.blocks) {
      const Graph h = induced_subgraph(g, b).graph;
      CHECK(is_connected(h));
      if (b.size() > 2) CHECK(structural_checks(h).is_biconnected);
    }
    // block tree is a tree; leaves are blocks with one cut vertex
    const int nodes = static_cast<int>(bd.block_tree.size());
    CHECK(nodes == bd.block_count() + static_cast<int>(bd.cut_vertices.size()));
    int arcs = 0;
    for (const auto& adj : bd.block_tree) arcs += static_cast<int>(adj.size());
    CHECK(arcs / 2 == nodes - 1);
    if (bd.block_count() > 1) {
      for (int b = 0; b < bd.block_count(); ++b) {
        int cuts = 0;
        for (Vertex v : bd.blocks[b]) cuts += bd.is_cut_vertex(v);
        const bool leaf = std::find(bd.leaf_blocks.begin(), bd.leaf_blocks.end(), b) !=
                          bd.leaf_blocks.end();
        CHECK(leaf == (cuts == 1));
      }
    }
  }
}

TEST_CASE("glued cliques come back as blocks") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = gen_block_graph(12, seed, 5);
    for (const auto& b : block_decomposition(g).blocks) {
      CHECK(is_complete(induced_subgraph(g, b).graph));
    }
  }
  // two triangles sharing vertex 2
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(block_decomposition(bowtie).blocks == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("structural checks") {
  const auto c5 = structural_checks(cycle_graph(5));
  CHECK(c5.is_connected);
  CHECK(c5.is_biconnected);
  CHECK_FALSE(c5.is_bipartite);
  CHECK(c5.max_degree == 2);
  CHECK(c5.girth == 5);

  const auto k4 = structural_checks(complete_graph(4));
  CHECK(k4.is_biconnected);
  CHECK(k4.girth == 3);
  CHECK(k4.max_degree == 3);

  const auto edge = structural_checks(path_graph(2));
  CHECK(edge.is_connected);
  CHECK_FALSE(edge.is_biconnected);
  CHECK(edge.is_bipartite);
  CHECK_FALSE(edge.girth.has_value());

  CHECK(structural_checks(cycle_graph(6)).is_bipartite);
  CHECK(structural_checks(cycle_graph(8)).girth == 8);
  CHECK_FALSE(structural_checks(Graph(3, {{0, 1}})).is_connected);
  // petersen girth is 5
  CHECK(structural_checks(cubic_catalog()[3].graph).girth == 5);
}

TEST_CASE("complete and cycle recognition") {
  CHECK(is_complete(complete_graph(5)));
  CHECK(is_complete(Graph(1)));
  CHECK_FALSE(is_complete(cycle_graph(4)));
  CHECK(is_cycle(cycle_graph(3)));
  CHECK(is_cycle(cycle_graph(7)));
  CHECK_FALSE(is_cycle(path_graph(4)));
  CHECK_FALSE(is_cycle(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}
