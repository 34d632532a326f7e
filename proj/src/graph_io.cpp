#include <sstream>

#include "sepgraph/graph.hpp"

namespace sepgraph {

SeparatedGraph parse_graph(const std::string& text, bool auto_trivial) {
  RawGraph raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive))
      continue;
    auto fail = [lineno](const std::string& msg) -> Error {
      return Error(ErrorKind::SyntaxError,
                   "line " + std::to_string(lineno) + ": " + msg);
    };
    if (directive == "vertex") {
      std::string name, extra;
      if (!(ls >> name))
        throw fail("vertex needs a name");
      if (ls >> extra)
        throw fail("trailing token '" + extra + "'");
      raw.vertices.push_back(name);
    } else if (directive == "edge") {
      RawGraph::RawEdge e;
      std::string extra;
      if (!(ls >> e.name >> e.source >> e.range))
        throw fail("edge needs <name> <source> <range>");
      if (ls >> extra)
        throw fail("trailing token '" + extra + "'");
      raw.edges.push_back(std::move(e));
    } else if (directive == "block") {
      RawGraph::RawBlock b;
      if (!(ls >> b.vertex >> b.name))
        throw fail("block needs <vertex> <blockname> <edge>...");
      std::string edge;
      while (ls >> edge)
        b.edges.push_back(edge);
      if (b.edges.empty())
        throw fail("block '" + b.name + "' lists no edges");
      raw.blocks.push_back(std::move(b));
    } else {
      throw fail("unknown directive '" + directive + "'");
    }
  }

  if (auto_trivial) {
    // gather unassigned edges at each vertex into a synthetic block T_<vertex>
    std::set<std::string> assigned;
    for (const auto& b : raw.blocks)
      for (const auto& e : b.edges)
        assigned.insert(e);
    std::map<std::string, RawGraph::RawBlock> synthetic;
    for (const auto& e : raw.edges)
      if (!assigned.count(e.name)) {
        auto& blk = synthetic[e.source];
        blk.vertex = e.source;
        blk.name = "T_" + e.source;
        blk.edges.push_back(e.name);
      }
    for (auto& [v, blk] : synthetic)
      raw.blocks.push_back(std::move(blk));
  }
  return SeparatedGraph::validate(raw);
}

std::string serialize_graph(const SeparatedGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "vertex " << g.vertex_name(v) << "\n";
  for (int e = 0; e < g.edge_count(); ++e)
    out << "edge " << g.edge(e).name << " " << g.vertex_name(g.edge(e).source)
        << " " << g.vertex_name(g.edge(e).range) << "\n";
  for (int b = 0; b < g.block_count(); ++b) {
    const Block& blk = g.block(b);
    out << "block " << g.vertex_name(blk.vertex) << " " << blk.name;
    for (int e : blk.edges)
      out << " " << g.edge(e).name;
    out << "\n";
  }
  return out.str();
}

} // namespace sepgraph
