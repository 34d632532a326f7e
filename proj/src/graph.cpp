#include "sepgraph/graph.hpp"

#include <algorithm>

#include "sepgraph/hereditary.hpp"

namespace sepgraph {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_')
      return false;
  return true;
}

} // namespace

SeparatedGraph SeparatedGraph::build(const RawGraph& raw, bool trivial) {
  SeparatedGraph g;
  for (const auto& v : raw.vertices) {
    if (!valid_identifier(v))
      throw Error(ErrorKind::SyntaxError, "bad vertex name '" + v + "'");
    if (!g.vertex_idx_.emplace(v, (int)g.vertices_.size()).second)
      throw Error(ErrorKind::DuplicateName, "vertex '" + v + "'");
    g.vertices_.push_back(v);
  }
  g.out_edges_.resize(g.vertices_.size());
  for (const auto& e : raw.edges) {
    if (!valid_identifier(e.name))
      throw Error(ErrorKind::SyntaxError, "bad edge name '" + e.name + "'");
    if (g.vertex_idx_.count(e.name))
      throw Error(ErrorKind::DuplicateName,
                  "edge '" + e.name + "' collides with a vertex name");
    if (!g.edge_idx_.emplace(e.name, (int)g.edges_.size()).second)
      throw Error(ErrorKind::DuplicateName, "edge '" + e.name + "'");
    auto sv = g.vertex_idx_.find(e.source);
    if (sv == g.vertex_idx_.end())
      throw Error(ErrorKind::UnknownVertex,
                  "source '" + e.source + "' of edge '" + e.name + "'");
    auto rv = g.vertex_idx_.find(e.range);
    if (rv == g.vertex_idx_.end())
      throw Error(ErrorKind::UnknownVertex,
                  "range '" + e.range + "' of edge '" + e.name + "'");
    g.out_edges_[sv->second].push_back((int)g.edges_.size());
    g.edges_.push_back(Edge{e.name, sv->second, rv->second});
  }

  g.edge_block_.assign(g.edges_.size(), -1);
  g.vertex_blocks_.resize(g.vertices_.size());

  if (trivial) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.out_edges_[v].empty())
        continue;
      g.vertex_blocks_[v].push_back((int)g.blocks_.size());
      for (int e : g.out_edges_[v])
        g.edge_block_[e] = (int)g.blocks_.size();
      g.blocks_.push_back(Block{"T_" + g.vertices_[v], v, g.out_edges_[v]});
    }
    return g;
  }

  for (const auto& b : raw.blocks) {
    auto bv = g.vertex_idx_.find(b.vertex);
    if (bv == g.vertex_idx_.end())
      throw Error(ErrorKind::UnknownVertex,
                  "block '" + b.name + "' at unknown vertex '" + b.vertex + "'");
    int v = bv->second;
    if (g.find_block(b.vertex, b.name) >= 0)
      throw Error(ErrorKind::DuplicateName,
                  "block '" + b.name + "' at vertex '" + b.vertex + "'");
    if (b.edges.empty())
      throw Error(ErrorKind::EmptyBlock,
                  "block '" + b.name + "' at vertex '" + b.vertex + "'");
    Block blk{b.name, v, {}};
    for (const auto& en : b.edges) {
      auto it = g.edge_idx_.find(en);
      if (it == g.edge_idx_.end())
        throw Error(ErrorKind::UnknownSymbol,
                    "edge '" + en + "' in block '" + b.name + "'");
      int e = it->second;
      if (g.edges_[e].source != v)
        throw Error(ErrorKind::BlockAtWrongVertex,
                    "edge '" + en + "' has source '" +
                        g.vertices_[g.edges_[e].source] + "', not '" +
                        b.vertex + "'");
      if (g.edge_block_[e] != -1)
        throw Error(ErrorKind::BlockOverlap, "edge '" + en + "' in two blocks");
      if (std::find(blk.edges.begin(), blk.edges.end(), e) != blk.edges.end())
        throw Error(ErrorKind::BlockOverlap,
                    "edge '" + en + "' repeated in block '" + b.name + "'");
      g.edge_block_[e] = (int)g.blocks_.size();
      blk.edges.push_back(e);
    }
    g.vertex_blocks_[v].push_back((int)g.blocks_.size());
    g.blocks_.push_back(std::move(blk));
  }

  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge_block_[e] == -1)
      throw Error(ErrorKind::BlockIncomplete,
                  "edge '" + g.edges_[e].name + "' at vertex '" +
                      g.vertices_[g.edges_[e].source] + "' is in no block");
  return g;
}

SeparatedGraph SeparatedGraph::validate(const RawGraph& raw) {
  return build(raw, false);
}

SeparatedGraph SeparatedGraph::trivially_separate(const RawGraph& raw) {
  return build(raw, true);
}

int SeparatedGraph::vertex_index(const std::string& name) const {
  auto it = vertex_idx_.find(name);
  if (it == vertex_idx_.end())
    throw Error(ErrorKind::UnknownVertex, "'" + name + "'");
  return it->second;
}

int SeparatedGraph::find_vertex(const std::string& name) const {
  auto it = vertex_idx_.find(name);
  return it == vertex_idx_.end() ? -1 : it->second;
}

int SeparatedGraph::find_edge(const std::string& name) const {
  auto it = edge_idx_.find(name);
  return it == edge_idx_.end() ? -1 : it->second;
}

int SeparatedGraph::find_block(const std::string& vertex,
                               const std::string& name) const {
  int v = find_vertex(vertex);
  if (v < 0)
    return -1;
  for (int b : vertex_blocks_[v])
    if (blocks_[b].name == name)
      return b;
  return -1;
}

int SeparatedGraph::block_index(const std::string& vertex,
                                const std::string& name) const {
  int b = find_block(vertex, name);
  if (b < 0)
    throw Error(ErrorKind::UnknownBlock,
                "'" + name + "' at vertex '" + vertex + "'");
  return b;
}

bool SeparatedGraph::is_trivially_separated() const {
  for (const auto& bs : vertex_blocks_)
    if (bs.size() > 1)
      return false;
  return true;
}

std::string SeparatedGraph::block_label(int b) const {
  int dup = 0;
  for (const auto& blk : blocks_)
    if (blk.name == blocks_[b].name)
      ++dup;
  if (dup > 1)
    return vertices_[blocks_[b].vertex] + ":" + blocks_[b].name;
  return blocks_[b].name;
}

bool SeparatedGraph::operator==(const SeparatedGraph& other) const {
  if (vertices_ != other.vertices_)
    return false;
  if (edges_.size() != other.edges_.size())
    return false;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name != other.edges_[i].name ||
        edges_[i].source != other.edges_[i].source ||
        edges_[i].range != other.edges_[i].range)
      return false;
  if (blocks_.size() != other.blocks_.size())
    return false;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    const Block& a = blocks_[i];
    const Block& b = other.blocks_[i];
    if (a.name != b.name || a.vertex != b.vertex)
      return false;
    std::set<int> sa(a.edges.begin(), a.edges.end());
    std::set<int> sb(b.edges.begin(), b.edges.end());
    if (sa != sb)
      return false;
  }
  return true;
}

SeparatedGraph block_subgraph(const SeparatedGraph& g, int block) {
  if (block < 0 || block >= g.block_count())
    throw Error(ErrorKind::UnknownBlock, "index " + std::to_string(block));
  const Block& blk = g.block(block);
  RawGraph raw;
  for (int v = 0; v < g.vertex_count(); ++v)
    raw.vertices.push_back(g.vertex_name(v));
  RawGraph::RawBlock rb{g.vertex_name(blk.vertex), blk.name, {}};
  for (int e : blk.edges) {
    const Edge& ed = g.edge(e);
    raw.edges.push_back({ed.name, g.vertex_name(ed.source), g.vertex_name(ed.range)});
    rb.edges.push_back(ed.name);
  }
  raw.blocks.push_back(std::move(rb));
  return SeparatedGraph::validate(raw);
}

SeparatedGraph block_subgraph(const SeparatedGraph& g,
                              const std::string& vertex,
                              const std::string& block_name) {
  return block_subgraph(g, g.block_index(vertex, block_name));
}

SeparatedGraph build_emn(int m, int n) {
  if (m < 1 || m > n)
    throw Error(ErrorKind::InvalidParameters,
                "E(m,n) requires 1 <= m <= n, got m=" + std::to_string(m) +
                    ", n=" + std::to_string(n));
  RawGraph raw;
  raw.vertices = {"v", "w"};
  RawGraph::RawBlock X{"v", "X", {}}, Y{"v", "Y", {}};
  for (int i = 1; i <= n; ++i) {
    raw.edges.push_back({"a" + std::to_string(i), "v", "w"});
    X.edges.push_back("a" + std::to_string(i));
  }
  for (int j = 1; j <= m; ++j) {
    raw.edges.push_back({"b" + std::to_string(j), "v", "w"});
    Y.edges.push_back("b" + std::to_string(j));
  }
  raw.blocks = {X, Y};
  return SeparatedGraph::validate(raw);
}

SeparatedGraph build_rose(int n) {
  if (n < 0)
    throw Error(ErrorKind::InvalidParameters, "rose needs n >= 0");
  RawGraph raw;
  raw.vertices = {"v"};
  for (int i = 1; i <= n; ++i)
    raw.edges.push_back({"e" + std::to_string(i), "v", "v"});
  return SeparatedGraph::trivially_separate(raw);
}

SeparatedGraph build_hbk(int k, int l, int m, int n) {
  if (k < 2 || l < 2 || m < 2 || n < 2)
    throw Error(ErrorKind::InvalidParameters,
                "all of k,l,m,n must be >= 2");
  RawGraph raw;
  raw.vertices = {"v", "w1", "w2"};
  RawGraph::RawBlock X{"v", "X", {}}, Y{"v", "Y", {}};
  auto add = [&raw](const std::string& prefix, int count, const std::string& rng,
                    RawGraph::RawBlock& blk) {
    for (int i = 1; i <= count; ++i) {
      std::string name = prefix + std::to_string(i);
      raw.edges.push_back({name, "v", rng});
      blk.edges.push_back(name);
    }
  };
  add("a", k, "w1", X);
  add("b", l, "w1", Y);
  add("c", m, "w2", X);
  add("d", n, "w2", Y);
  raw.blocks = {X, Y};
  return SeparatedGraph::validate(raw);
}

SeparatedGraph quotient(const SeparatedGraph& g, const std::set<std::string>& H) {
  if (!is_hereditary(g, H))
    throw Error(ErrorKind::NotHereditary, "quotient set is not hereditary");
  if (!is_c_saturated(g, H))
    throw Error(ErrorKind::NotCSaturated, "quotient set is not C-saturated");
  std::vector<bool> in_h(g.vertex_count(), false);
  for (const auto& name : H)
    in_h[g.vertex_index(name)] = true;

  RawGraph raw;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_h[v])
      raw.vertices.push_back(g.vertex_name(v));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!in_h[ed.range])
      raw.edges.push_back(
          {ed.name, g.vertex_name(ed.source), g.vertex_name(ed.range)});
  }
  for (int b = 0; b < g.block_count(); ++b) {
    const Block& blk = g.block(b);
    if (in_h[blk.vertex])
      continue;
    RawGraph::RawBlock rb{g.vertex_name(blk.vertex), blk.name, {}};
    for (int e : blk.edges)
      if (!in_h[g.edge(e).range])
        rb.edges.push_back(g.edge(e).name);
    // nonempty because H is C-saturated
    raw.blocks.push_back(std::move(rb));
  }
  return SeparatedGraph::validate(raw);
}

bool is_complete_subobject(const SeparatedGraph& sub, const SeparatedGraph& g) {
  for (int v = 0; v < sub.vertex_count(); ++v)
    if (g.find_vertex(sub.vertex_name(v)) < 0)
      return false;
  for (int e = 0; e < sub.edge_count(); ++e) {
    int ge = g.find_edge(sub.edge(e).name);
    if (ge < 0)
      return false;
    if (g.edge(ge).source != g.find_vertex(sub.vertex_name(sub.edge(e).source)) ||
        g.edge(ge).range != g.find_vertex(sub.vertex_name(sub.edge(e).range)))
      return false;
  }
  // every block of sub must be exactly a block of g
  for (int b = 0; b < sub.block_count(); ++b) {
    const Block& sb = sub.block(b);
    int gb = g.find_block(sub.vertex_name(sb.vertex), sb.name);
    if (gb < 0)
      return false;
    std::set<std::string> se, ge;
    for (int e : sb.edges)
      se.insert(sub.edge(e).name);
    for (int e : g.block(gb).edges)
      ge.insert(g.edge(e).name);
    if (se != ge)
      return false;
  }
  // each block of g meeting sub's edges must be one of sub's blocks
  for (int e = 0; e < sub.edge_count(); ++e) {
    int ge = g.find_edge(sub.edge(e).name);
    const Block& gb = g.block(g.block_of_edge(ge));
    if (sub.find_block(g.vertex_name(gb.vertex), gb.name) < 0)
      return false;
  }
  return true;
}

bool is_fsgr_morphism(const SeparatedGraph& f, const SeparatedGraph& e,
                      const std::map<std::string, std::string>& phi0,
                      const std::map<std::string, std::string>& phi1) {
  // phi0 injective with image among e's vertices
  std::set<std::string> image;
  for (int v = 0; v < f.vertex_count(); ++v) {
    auto it = phi0.find(f.vertex_name(v));
    if (it == phi0.end() || e.find_vertex(it->second) < 0)
      return false;
    if (!image.insert(it->second).second)
      return false;
  }
  // graph morphism: incidence preserved
  for (int i = 0; i < f.edge_count(); ++i) {
    auto it = phi1.find(f.edge(i).name);
    if (it == phi1.end())
      return false;
    int ge = e.find_edge(it->second);
    if (ge < 0)
      return false;
    if (e.vertex_name(e.edge(ge).source) !=
            phi0.at(f.vertex_name(f.edge(i).source)) ||
        e.vertex_name(e.edge(ge).range) !=
            phi0.at(f.vertex_name(f.edge(i).range)))
      return false;
  }
  // each block of f maps bijectively onto a block of e
  for (int b = 0; b < f.block_count(); ++b) {
    const Block& blk = f.block(b);
    std::set<std::string> target;
    for (int i : blk.edges)
      target.insert(phi1.at(f.edge(i).name));
    if (target.size() != blk.edges.size())
      return false; // not injective on the block
    int ge = e.find_edge(*target.begin());
    const Block& eb = e.block(e.block_of_edge(ge));
    std::set<std::string> eb_edges;
    for (int i : eb.edges)
      eb_edges.insert(e.edge(i).name);
    if (target != eb_edges)
      return false;
  }
  return true;
}

} // namespace sepgraph
