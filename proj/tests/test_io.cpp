#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "veccon/errors.hpp"
#include "veccon/gadgets.hpp"
#include "veccon/generators.hpp"
#include "veccon/io.hpp"

using namespace veccon;

namespace {

Instance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void check_parse_error(const std::string& text, int line, int column) {
  try {
    parse(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("instance parsing") {
  const Instance inst = parse("c path\np vcn 3 2\ne 1 2\ne 2 3\nr 1 2\nf 3\n");
  CHECK(inst.graph == oracle::path_graph(3));
  CHECK(inst.requirements == std::vector<int>{2, 0, 0});
  CHECK(inst.free_set == VertexSet{2});
  CHECK(parse("p edge 2 1\ne 1 2\n").graph.edge_count() == 1);
}

TEST_CASE("instance parse errors carry positions") {
  check_parse_error("e 1 2\n", 1, 1);
  check_parse_error("p vcn 3 1\ne 1 4\n", 2, 5);
  check_parse_error("p vcn 3 1\ne 1 x\n", 2, 5);
  check_parse_error("p vcn 3 1\ne 1 2\nr 1 1\nr 1 2\n", 4, 3);
  check_parse_error("p vcn 3 2\ne 1 2\n", 1, 1);
  check_parse_error("p vcn 3 1\ne 2 2\n", 2, 5);
  check_parse_error("p vcn 3 1\nq 1 2\n", 2, 1);
  check_parse_error("p vcn 3 1\ne 1 2 3\n", 2, 7);
  check_parse_error("p vcn 3 2\ne 1 2\ne 2 1\n", 1, 1);
  check_parse_error("", 0, 1);
}

TEST_CASE("instance round trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = gen_requirements(gen_block_cactus(20, seed), 5, seed, 0.3);
    std::ostringstream out;
    write_instance(out, inst, {"seed " + std::to_string(seed)});
    CHECK(parse(out.str()) == inst);
  }
}

TEST_CASE("solution format") {
  std::ostringstream out;
  write_solution(out, {0, 4}, {"size 2"});
  std::istringstream in(out.str());
  CHECK(parse_solution(in, 5) == VertexSet{0, 4});

  std::istringstream short_size("s 3\nv 1\n");
  CHECK_THROWS_AS(parse_solution(short_size, 5), ParseError);
  std::istringstream out_of_range("s 1\nv 9\n");
  CHECK_THROWS_AS(parse_solution(out_of_range, 5), ParseError);
  std::istringstream unbounded("s 1\nv 9\n");
  CHECK(parse_solution(unbounded, -1) == VertexSet{8});
  std::istringstream dup("s 2\nv 1\nv 1\n");
  CHECK_THROWS_AS(parse_solution(dup, 5), ParseError);
}

TEST_CASE("mapping round trip") {
  const Graph k4 = cubic_catalog()[0].graph;
  for (int k : {0, 1}) {
    const GadgetMapping m = k ? build_bipartite_gadget(k4, k) : build_gadget(k4);
    std::ostringstream out;
    write_mapping(out, m);
    std::istringstream in(out.str());
    const GadgetMapping back = parse_mapping(in);
    CHECK(back.gadget == m.gadget);
    CHECK(back.requirements == m.requirements);
    CHECK(back.subdivision_parameter == k);
  }
  std::ostringstream out;
  write_mapping(out, build_gadget(k4));
  std::string text = out.str();
  text.replace(text.find("role 5 w_side"), 13, "role 5 z_side");
  std::istringstream tampered(text);
  CHECK_THROWS_AS(parse_mapping(tampered), ParseError);
}

TEST_CASE("family and dot output") {
  std::ostringstream fam;
  write_family(fam, ViolatingFamily{{{0, 1, 2}}, true});
  CHECK(fam.str().find("p fam 1\nh 1 2 3\n") != std::string::npos);

  const std::string dot = to_dot(Instance(oracle::path_graph(3), {1, 1, 1}, {2}), {1});
  CHECK(dot.rfind("graph veccon {", 0) == 0);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("2 -- 3;") != std::string::npos);
  CHECK(dot.find("r=1") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("filled") != std::string::npos);
}
