#ifndef SEPGRAPH_KTHEORY_HPP
#define SEPGRAPH_KTHEORY_HPP

#include "sepgraph/graph.hpp"
#include "sepgraph/intlin.hpp"

namespace sepgraph {

/// The matrix of 1_C - A^t: rows indexed by vertices, columns by blocks.
/// The column for block X at vertex v is delta_v - sum_w a_X(v,w) delta_w,
/// where a_X(v,w) counts edges in X from v to w.
struct SeparatedAdjacency {
  std::vector<std::string> row_labels; // vertex names
  std::vector<std::string> col_labels; // block labels
  IntMatrix matrix;
};

struct KTheoryResult {
  AbelianGroupPresentation k0;                   // with vertex images
  int k1_rank = 0;
  std::vector<std::vector<BigInt>> k1_basis;     // kernel vectors, block coords
  std::vector<std::string> k1_labels;            // block labels (coordinates)
};

SeparatedAdjacency adjacency(const SeparatedGraph& g);

/// K0 = coker(1_C - A^t) with [v] -> class of delta_v; K1 = ker of the same map.
KTheoryResult k_theory(const SeparatedGraph& g);

/// Classical graph C*-algebra K-theory: the trivially separated specialization.
KTheoryResult k_theory_classical(const RawGraph& raw);

} // namespace sepgraph

#endif
