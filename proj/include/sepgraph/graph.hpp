#ifndef SEPGRAPH_GRAPH_HPP
#define SEPGRAPH_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sepgraph/errors.hpp"

namespace sepgraph {

/// Unvalidated graph description, as read from a file or built by hand.
struct RawGraph {
  struct RawEdge {
    std::string name, source, range;
  };
  struct RawBlock {
    std::string vertex, name;
    std::vector<std::string> edges;
  };
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
  std::vector<RawBlock> blocks;
};

struct Edge {
  std::string name;
  int source = -1;
  int range = -1;
};

/// One cell of the partition of s^-1(vertex).
struct Block {
  std::string name;
  int vertex = -1;
  std::vector<int> edges; // declaration order
};

/// A finitely separated graph: directed graph plus, at each non-sink vertex,
/// a partition of its outgoing edges into named blocks. Immutable once built.
class SeparatedGraph {
public:
  /// Checks all invariants of a separated graph. Throws on violation.
  static SeparatedGraph validate(const RawGraph& raw);

  /// One block per non-sink vertex holding all its outgoing edges; blocks of
  /// the raw description are ignored. The synthetic block at v is named T_v.
  static SeparatedGraph trivially_separate(const RawGraph& raw);

  int vertex_count() const { return (int)vertices_.size(); }
  int edge_count() const { return (int)edges_.size(); }
  int block_count() const { return (int)blocks_.size(); }

  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const Block& block(int b) const { return blocks_[b]; }

  /// Throws UnknownVertex.
  int vertex_index(const std::string& name) const;
  /// Returns -1 if absent.
  int find_vertex(const std::string& name) const;
  int find_edge(const std::string& name) const;
  /// Throws UnknownBlock.
  int block_index(const std::string& vertex, const std::string& name) const;
  int find_block(const std::string& vertex, const std::string& name) const;

  int block_of_edge(int e) const { return edge_block_[e]; }
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  const std::vector<int>& blocks_at(int v) const { return vertex_blocks_[v]; }

  bool is_sink(int v) const { return out_edges_[v].empty(); }
  bool is_trivially_separated() const;

  /// Display label for a block: its name if globally unique, else vertex:name.
  std::string block_label(int b) const;

  /// Structural equality: vertices and edges in declaration order, blocks
  /// matched by (vertex, name) with order-insensitive edge sets.
  bool operator==(const SeparatedGraph& other) const;

private:
  SeparatedGraph() = default;
  static SeparatedGraph build(const RawGraph& raw, bool trivial);

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Block> blocks_;
  std::map<std::string, int> vertex_idx_;
  std::map<std::string, int> edge_idx_;
  std::vector<int> edge_block_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::vector<int>> vertex_blocks_;
};

/// E_X: same vertices, edges restricted to the given block, trivially
/// separated with the block's name preserved.
SeparatedGraph block_subgraph(const SeparatedGraph& g, int block);
SeparatedGraph block_subgraph(const SeparatedGraph& g,
                              const std::string& vertex,
                              const std::string& block_name);

/// The separated graph E(m,n): vertices v,w; edges a1..an and b1..bm from v
/// to w; blocks X = {a1..an}, Y = {b1..bm}. Requires 1 <= m <= n.
SeparatedGraph build_emn(int m, int n);

/// Rose with n loops at a single vertex v, trivially separated.
SeparatedGraph build_rose(int n);

/// Three-vertex graph with all edges leaving v: a1..ak and b1..bl into w1,
/// c1..cm and d1..dn into w2; blocks X = {a*,c*}, Y = {b*,d*}.
/// All parameters must be >= 2.
SeparatedGraph build_hbk(int k, int l, int m, int n);

/// Quotient graph (E/H, C/H). Re-checks that H is hereditary and C-saturated.
SeparatedGraph quotient(const SeparatedGraph& g, const std::set<std::string>& H);

/// True iff sub's vertices/edges are subsets of g's with agreeing incidence
/// and every block of sub is exactly a block of g.
bool is_complete_subobject(const SeparatedGraph& sub, const SeparatedGraph& g);

/// FSGr morphism check for an explicitly given vertex/edge map.
bool is_fsgr_morphism(const SeparatedGraph& f, const SeparatedGraph& e,
                      const std::map<std::string, std::string>& phi0,
                      const std::map<std::string, std::string>& phi1);

/// Line-oriented graph file format; '#' starts a comment.
/// Directives: vertex <name> | edge <name> <source> <range>
///           | block <vertex> <blockname> <edge> [<edge> ...]
SeparatedGraph parse_graph(const std::string& text, bool auto_trivial = false);
std::string serialize_graph(const SeparatedGraph& g);

} // namespace sepgraph

#endif
