#include "sepgraph/hereditary.hpp"

#include <algorithm>

namespace sepgraph {

namespace {

std::vector<bool> to_mask(const SeparatedGraph& g, const VertexSet& h) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (const auto& name : h)
    mask[g.vertex_index(name)] = true;
  return mask;
}

VertexSet from_mask(const SeparatedGraph& g, const std::vector<bool>& mask) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mask[v])
      out.insert(g.vertex_name(v));
  return out;
}

bool mask_hereditary(const SeparatedGraph& g, const std::vector<bool>& mask) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (mask[g.edge(e).source] && !mask[g.edge(e).range])
      return false;
  return true;
}

bool mask_c_saturated(const SeparatedGraph& g, const std::vector<bool>& mask) {
  for (int b = 0; b < g.block_count(); ++b) {
    const Block& blk = g.block(b);
    if (mask[blk.vertex])
      continue;
    bool all_in = true;
    for (int e : blk.edges)
      if (!mask[g.edge(e).range]) {
        all_in = false;
        break;
      }
    if (all_in)
      return false;
  }
  return true;
}

std::vector<bool> mask_closure(const SeparatedGraph& g, std::vector<bool> mask) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.edge_count(); ++e)
      if (mask[g.edge(e).source] && !mask[g.edge(e).range]) {
        mask[g.edge(e).range] = true;
        changed = true;
      }
    for (int b = 0; b < g.block_count(); ++b) {
      const Block& blk = g.block(b);
      if (mask[blk.vertex])
        continue;
      bool all_in = true;
      for (int e : blk.edges)
        if (!mask[g.edge(e).range]) {
          all_in = false;
          break;
        }
      if (all_in) {
        mask[blk.vertex] = true;
        changed = true;
      }
    }
  }
  return mask;
}

} // namespace

bool is_hereditary(const SeparatedGraph& g, const VertexSet& h) {
  return mask_hereditary(g, to_mask(g, h));
}

bool is_c_saturated(const SeparatedGraph& g, const VertexSet& h) {
  return mask_c_saturated(g, to_mask(g, h));
}

bool is_saturated(const SeparatedGraph& g, const VertexSet& h) {
  auto mask = to_mask(g, h);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mask[v] || g.is_sink(v))
      continue;
    bool all_in = true;
    for (int e : g.out_edges(v))
      if (!mask[g.edge(e).range]) {
        all_in = false;
        break;
      }
    if (all_in)
      return false;
  }
  return true;
}

VertexSet closure(const SeparatedGraph& g, const VertexSet& s) {
  return from_mask(g, mask_closure(g, to_mask(g, s)));
}

Lattice enumerate_lattice(const SeparatedGraph& g) {
  int n = g.vertex_count();
  if (n > 20)
    throw Error(ErrorKind::TooLarge,
                "lattice enumeration limited to 20 vertices, graph has " +
                    std::to_string(n));
  std::vector<std::vector<bool>> masks;
  for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
    std::vector<bool> mask(n);
    for (int v = 0; v < n; ++v)
      mask[v] = (bits >> v) & 1;
    if (mask_hereditary(g, mask) && mask_c_saturated(g, mask))
      masks.push_back(std::move(mask));
  }

  Lattice lat;
  for (const auto& m : masks)
    lat.members.push_back(from_mask(g, m));
  std::sort(lat.members.begin(), lat.members.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a < b;
            });

  auto index_of = [&lat](const VertexSet& s) {
    return (int)(std::find(lat.members.begin(), lat.members.end(), s) -
                 lat.members.begin());
  };
  int k = (int)lat.members.size();
  lat.meet.assign(k, std::vector<int>(k));
  lat.join.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      VertexSet inter, uni = lat.members[i];
      std::set_intersection(lat.members[i].begin(), lat.members[i].end(),
                            lat.members[j].begin(), lat.members[j].end(),
                            std::inserter(inter, inter.begin()));
      uni.insert(lat.members[j].begin(), lat.members[j].end());
      lat.meet[i][j] = index_of(inter);
      lat.join[i][j] = index_of(closure(g, uni));
    }
  return lat;
}

} // namespace sepgraph
