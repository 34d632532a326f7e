#ifndef SEPGRAPH_HEREDITARY_HPP
#define SEPGRAPH_HEREDITARY_HPP

#include <set>
#include <string>
#include <vector>

#include "sepgraph/graph.hpp"

namespace sepgraph {

using VertexSet = std::set<std::string>;

/// H closed under forward reachability.
bool is_hereditary(const SeparatedGraph& g, const VertexSet& h);

/// No vertex outside H has a block whose ranges all lie in H.
bool is_c_saturated(const SeparatedGraph& g, const VertexSet& h);

/// Classical saturation for trivially separated graphs: r(s^-1(v)) in H
/// forces v in H for non-sinks v.
bool is_saturated(const SeparatedGraph& g, const VertexSet& h);

/// Smallest hereditary C-saturated superset of s.
VertexSet closure(const SeparatedGraph& g, const VertexSet& s);

struct Lattice {
  std::vector<VertexSet> members;               // by size, then lexicographic
  std::vector<std::vector<int>> meet;           // intersection
  std::vector<std::vector<int>> join;           // closure of union
};

/// All hereditary C-saturated subsets, brute force. Guarded at 20 vertices.
Lattice enumerate_lattice(const SeparatedGraph& g);

} // namespace sepgraph

#endif
