#ifndef VECCON_IO_HPP
#define VECCON_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "veccon/gadgets.hpp"
#include "veccon/graph.hpp"
#include "veccon/instance.hpp"
#include "veccon/oracle.hpp"

namespace veccon {

// Text formats are line oriented and 1-indexed; `c` lines are comments.
//
//   instance   p vcn <n> <m> | e <u> <v> | r <v> <k> | f <v>
//              (`p edge <n> <m>` is accepted for plain graphs)
//   solution   s <size> | v <id>
//   mapping    p map <source-n> <source-m> <k> | se <u> <v> |
//              role <gadget-id> <tag> <source-refs>
//   family     p fam <count> | h <id> <id> ...
//
// Parsers throw ParseError carrying the offending line and column.

Instance parse_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst,
                    const std::vector<std::string>& comments = {});

/// vertex_count bounds the accepted ids; pass -1 to skip the range check.
VertexSet parse_solution(std::istream& in, int vertex_count);
VertexSet read_solution_file(const std::string& path, int vertex_count);
void write_solution(std::ostream& out, const VertexSet& s,
                    const std::vector<std::string>& comments = {});

void write_mapping(std::ostream& out, const GadgetMapping& m);
/// Rebuilds the gadget from the recorded source graph and checks every role
/// line against the rebuilt mapping.
GadgetMapping parse_mapping(std::istream& in);
GadgetMapping read_mapping_file(const std::string& path);

void write_family(std::ostream& out, const ViolatingFamily& family);

/// Graphviz text; requirement labels, free vertices double-circled and
/// solution vertices filled.
std::string to_dot(const Instance& inst, const VertexSet& solution = {});

}  // namespace veccon

#endif  // VECCON_IO_HPP
