#include <doctest.h>

#include "sepgraph/graph.hpp"

using namespace sepgraph;

static const char* kEmn23 = R"(# E(2,3)
vertex v
vertex w
edge a1 v w
edge a2 v w
edge a3 v w
edge b1 v w
edge b2 v w
block v X a1 a2 a3
block v Y b1 b2
)";

TEST_CASE("parse and validate a separated graph file") {
  SeparatedGraph g = parse_graph(kEmn23);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 5);
  CHECK(g.block_count() == 2);
  CHECK(!g.is_trivially_separated());
  CHECK(g == build_emn(2, 3));
  CHECK(g.block_of_edge(g.find_edge("a2")) == g.block_index("v", "X"));
  CHECK(g.is_sink(g.vertex_index("w")));
}

TEST_CASE("serialize round trip") {
  SeparatedGraph g = build_hbk(2, 3, 2, 2);
  CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("validation failures carry the right error kind") {
  auto kind_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError; // no throw: let the check below fail
  };
  CHECK(kind_of("vertex v\nvertex v\n") == ErrorKind::DuplicateName);
  CHECK(kind_of("vertex v\nedge e v u\n") == ErrorKind::UnknownVertex);
  CHECK(kind_of("vertex v\nedge e v v\n") == ErrorKind::BlockIncomplete);
  CHECK(kind_of("vertex v\nedge e v v\nedge f v v\n"
                "block v X e\nblock v Y e\n") == ErrorKind::BlockOverlap);
  CHECK(kind_of("vertex v\nvertex w\nedge e v v\nblock w X e\n") ==
        ErrorKind::BlockAtWrongVertex);
  CHECK(kind_of("vertx v\n") == ErrorKind::SyntaxError);
  CHECK(kind_of("vertex v extra\n") == ErrorKind::SyntaxError);
}

TEST_CASE("auto-trivial gathers unassigned edges") {
  SeparatedGraph g =
      parse_graph("vertex v\nedge e v v\nedge f v v\n", /*auto_trivial=*/true);
  CHECK(g.block_count() == 1);
  CHECK(g.block(0).name == "T_v");
  CHECK(g.is_trivially_separated());
}

TEST_CASE("builtin families") {
  CHECK_THROWS_AS(build_emn(3, 2), Error);
  CHECK_THROWS_AS(build_emn(0, 1), Error);
  CHECK_THROWS_AS(build_hbk(1, 2, 2, 2), Error);
  CHECK(build_rose(0).edge_count() == 0);
  CHECK(build_rose(4).block_count() == 1);
  SeparatedGraph h = build_hbk(2, 2, 2, 2);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 8);
  CHECK(h.block(h.block_index("v", "X")).edges.size() == 4);
}

TEST_CASE("block subgraph") {
  SeparatedGraph g = build_emn(2, 3);
  SeparatedGraph ex = block_subgraph(g, "v", "X");
  CHECK(ex.vertex_count() == 2);
  CHECK(ex.edge_count() == 3);
  CHECK(ex.is_trivially_separated());
  CHECK(ex.block(0).name == "X");
  CHECK(is_complete_subobject(ex, g));
  // a proper subset of a block is not a complete subobject
  RawGraph raw;
  raw.vertices = {"v", "w"};
  raw.edges = {{"a1", "v", "w"}};
  raw.blocks = {{"v", "X", {"a1"}}};
  CHECK(!is_complete_subobject(SeparatedGraph::validate(raw), g));
}

TEST_CASE("quotient graphs") {
  SeparatedGraph h = build_hbk(2, 2, 2, 2);
  SeparatedGraph q = quotient(h, {"w1"});
  CHECK(q.vertex_count() == 2);
  CHECK(q.edge_count() == 4); // c1 c2 d1 d2
  CHECK(q.block_count() == 2);
  CHECK(q.find_edge("a1") == -1);
  // the quotient has the shape of E(2,2)
  CHECK(q.block(q.block_index("v", "X")).edges.size() == 2);
  CHECK(q.block(q.block_index("v", "Y")).edges.size() == 2);

  CHECK(quotient(h, {}) == h);
  CHECK_THROWS_AS(quotient(build_emn(2, 3), {"w"}), Error); // not C-saturated
  CHECK_THROWS_AS(quotient(h, {"v"}), Error);               // not hereditary
}

TEST_CASE("morphism check") {
  SeparatedGraph e23 = build_emn(2, 3);
  SeparatedGraph ex = block_subgraph(e23, "v", "X");
  std::map<std::string, std::string> id0{{"v", "v"}, {"w", "w"}};
  std::map<std::string, std::string> id1{{"a1", "a1"}, {"a2", "a2"}, {"a3", "a3"}};
  CHECK(is_fsgr_morphism(ex, e23, id0, id1));
  // collapsing two edges of one block is not admissible
  std::map<std::string, std::string> bad = id1;
  bad["a2"] = "a1";
  CHECK(!is_fsgr_morphism(ex, e23, id0, bad));
}
