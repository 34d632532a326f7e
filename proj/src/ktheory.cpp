#include "sepgraph/ktheory.hpp"

namespace sepgraph {

SeparatedAdjacency adjacency(const SeparatedGraph& g) {
  SeparatedAdjacency adj;
  for (int v = 0; v < g.vertex_count(); ++v)
    adj.row_labels.push_back(g.vertex_name(v));
  for (int b = 0; b < g.block_count(); ++b)
    adj.col_labels.push_back(g.block_label(b));
  adj.matrix = IntMatrix(g.vertex_count(), g.block_count());
  for (int b = 0; b < g.block_count(); ++b) {
    const Block& blk = g.block(b);
    adj.matrix.at(blk.vertex, b) += 1;
    for (int e : blk.edges)
      adj.matrix.at(g.edge(e).range, b) -= 1;
  }
  return adj;
}

KTheoryResult k_theory(const SeparatedGraph& g) {
  SeparatedAdjacency adj = adjacency(g);
  KTheoryResult r;
  r.k0 = cokernel(adj.matrix, adj.row_labels);
  r.k1_basis = kernel(adj.matrix);
  r.k1_rank = (int)r.k1_basis.size();
  r.k1_labels = adj.col_labels;
  return r;
}

KTheoryResult k_theory_classical(const RawGraph& raw) {
  return k_theory(SeparatedGraph::trivially_separate(raw));
}

} // namespace sepgraph
